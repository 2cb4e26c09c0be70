#include <doctest.h>

#include <cstring>
#include <string>

#include "xalg/xalg.h"

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { xalg_string_free(p); }
    std::string get() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("version and size limit are exposed") {
    CHECK(std::strlen(xalg_version()) > 0);
    CHECK(xalg_size_limit() == 64);
}

TEST_CASE("parse, serialize and free a bundle through the C surface") {
    Str err;
    xalg_bundle* b = xalg_bundle_parse(R"({"groups":{"z2":{"kind":"cyclic","n":2}}})", &err.p);
    REQUIRE(b != nullptr);
    Str text;
    text.p = xalg_bundle_serialize(b);
    CHECK(text.get().find("\"cyclic\"") != std::string::npos);
    xalg_bundle_free(b);

    Str err2;
    xalg_bundle* bad = xalg_bundle_parse("{not json", &err2.p);
    CHECK(bad == nullptr);
    CHECK(err2.get().find("SyntaxError") != std::string::npos);
}

TEST_CASE("catalog bundle round trips through parse and serialize") {
    xalg_bundle* cat = xalg_catalog_bundle();
    REQUIRE(cat != nullptr);
    Str first;
    first.p = xalg_bundle_serialize(cat);
    Str err;
    xalg_bundle* again = xalg_bundle_parse(first.p, &err.p);
    REQUIRE(again != nullptr);
    Str second;
    second.p = xalg_bundle_serialize(again);
    CHECK(first.get() == second.get());
    xalg_bundle_free(cat);
    xalg_bundle_free(again);
}

TEST_CASE("check through the C API uses catalog fallback when bundle is null") {
    Str report;
    CHECK(xalg_check(nullptr, "xmod", "conj_s3", &report.p) == XALG_OK);
    CHECK(report.get().find("PASS") != std::string::npos);

    Str fail_report;
    CHECK(xalg_check(nullptr, "xmod", "missing", &fail_report.p) == XALG_INPUT_ERROR);
}

TEST_CASE("axiom failures surface as XALG_CHECK_FAILED with a witness") {
    Str err;
    xalg_bundle* b = xalg_bundle_parse(
        R"({
            "homs": {"f": {"dom": "sym3", "cod": "z1", "map": [0,0,0,0,0,0]}},
            "actions": {"t": {"actor": "z1", "space": "sym3", "table": [[0,1,2,3,4,5]]}},
            "xmods": {"broken": {"a": "sym3", "b": "z1", "alpha": "f", "action": "t"}}
        })",
        &err.p);
    REQUIRE(b != nullptr);
    Str report;
    CHECK(xalg_check(b, "xmod", "broken", &report.p) == XALG_CHECK_FAILED);
    CHECK(report.get().find("witness=") != std::string::npos);
    xalg_bundle_free(b);
}

TEST_CASE("convert and roundtrip through the C API") {
    Str out;
    CHECK(xalg_convert(nullptr, "psi", "incl_2z4_z4", &out.p) == XALG_OK);
    CHECK(out.get().find("psi_incl_2z4_z4") != std::string::npos);

    Str rt;
    CHECK(xalg_roundtrip(nullptr, "xsq", "identity_sq_sym3", &rt.p) == XALG_OK);
    CHECK(rt.get().find("PASS") != std::string::npos);
}

TEST_CASE("enumerate and catalog listing through the C API") {
    Str report;
    CHECK(xalg_enumerate("xmods", "z2", "z2", 0, &report.p) == XALG_OK);
    CHECK(report.get().find("valid=2") != std::string::npos);

    Str listing;
    listing.p = xalg_catalog_list();
    REQUIRE(listing.p != nullptr);
    CHECK(listing.get().find("quat8") != std::string::npos);

    Str emission;
    CHECK(xalg_catalog_emit("sym3", &emission.p) == XALG_OK);
    CHECK(emission.get().find("\"table\"") != std::string::npos);
}

TEST_CASE("null arguments are input errors, not crashes") {
    Str report;
    CHECK(xalg_check(nullptr, nullptr, "x", &report.p) == XALG_INPUT_ERROR);
    CHECK(xalg_bundle_parse(nullptr, nullptr) == nullptr);
    CHECK(xalg_bundle_serialize(nullptr) == nullptr);
    xalg_bundle_free(nullptr);
    xalg_string_free(nullptr);
}
