// xalg command line: check, convert, roundtrip, enumerate, catalog.
// A thin shell over the libxalg C API; all computation happens behind it.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "xalg/xalg.h"

namespace {

struct StringHolder {
    char* p = nullptr;
    ~StringHolder() { xalg_string_free(p); }
};

struct BundleHolder {
    xalg_bundle* b = nullptr;
    ~BundleHolder() { xalg_bundle_free(b); }
};

// -f accepts a path or the literal "catalog"; NULL resolves against the
// catalog only, which is equivalent and avoids a copy.
bool load_bundle(const std::string& file, BundleHolder& holder, int& rc) {
    if (file.empty() || file == "catalog") return true;
    StringHolder err;
    holder.b = xalg_bundle_parse_file(file.c_str(), &err.p);
    if (!holder.b) {
        std::cerr << (err.p ? err.p : "error: cannot load bundle") << "\n";
        rc = 2;
        return false;
    }
    return true;
}

int emit(xalg_status st, const char* text, const std::string& out_path) {
    if (text) {
        if (!out_path.empty() && st == XALG_OK) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: FileError: cannot write '" << out_path << "'\n";
                return 2;
            }
            out << text;
        } else {
            std::cout << text;
        }
    }
    return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group workbench for crossed modules, internal categories and crossed squares"};
    app.require_subcommand(1);

    std::string kind, name, file, functor, out_path, grp_a, grp_b, sub;
    bool classify = false;

    CLI::App* check = app.add_subcommand("check", "run the axiom checker for one structure");
    check->add_option("kind", kind, "group|hom|action|xmod|ggpd|catxmod|xsq")->required();
    check->add_option("name", name, "entry name")->required();
    check->add_option("-f,--file", file, "bundle file or 'catalog'");

    CLI::App* convert = app.add_subcommand("convert", "apply a functor and emit the result bundle");
    convert->add_option("functor", functor, "phi|psi|eta|psi_sq|pair|discrete")->required();
    convert->add_option("name", name, "entry name")->required();
    convert->add_option("-f,--file", file, "bundle file or 'catalog'");
    convert->add_option("-o,--output", out_path, "write the bundle here instead of stdout");

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "verify the natural isomorphisms");
    roundtrip->add_option("kind", kind, "xmod|catxmod|xsq")->required();
    roundtrip->add_option("name", name, "entry name")->required();
    roundtrip->add_option("-f,--file", file, "bundle file or 'catalog'");

    CLI::App* enumerate = app.add_subcommand("enumerate", "brute-force structures on small carriers");
    enumerate->add_option("kind", kind, "actions|xmods|ggpds")->required();
    enumerate->add_option("--a", grp_a, "first carrier (A or G1), a catalog group")->required();
    enumerate->add_option("--b", grp_b, "second carrier (B or G0), a catalog group")->required();
    enumerate->add_flag("--classify", classify, "partition results up to isomorphism");

    CLI::App* cat = app.add_subcommand("catalog", "built-in example catalog");
    cat->require_subcommand(1);
    CLI::App* cat_list = cat->add_subcommand("list", "list catalog entries");
    CLI::App* cat_emit = cat->add_subcommand("emit", "emit one catalog entry as a bundle");
    cat_emit->add_option("name", sub, "catalog entry name")->required();

    CLI11_PARSE(app, argc, argv);

    int rc = 0;
    BundleHolder bundle;
    StringHolder report;

    if (check->parsed()) {
        if (!load_bundle(file, bundle, rc)) return rc;
        xalg_status st = xalg_check(bundle.b, kind.c_str(), name.c_str(), &report.p);
        return emit(st, report.p, "");
    }
    if (convert->parsed()) {
        if (!load_bundle(file, bundle, rc)) return rc;
        xalg_status st = xalg_convert(bundle.b, functor.c_str(), name.c_str(), &report.p);
        return emit(st, report.p, out_path);
    }
    if (roundtrip->parsed()) {
        if (!load_bundle(file, bundle, rc)) return rc;
        xalg_status st = xalg_roundtrip(bundle.b, kind.c_str(), name.c_str(), &report.p);
        return emit(st, report.p, "");
    }
    if (enumerate->parsed()) {
        auto start = std::chrono::steady_clock::now();
        xalg_status st =
            xalg_enumerate(kind.c_str(), grp_a.c_str(), grp_b.c_str(), classify ? 1 : 0, &report.p);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        int out_rc = emit(st, report.p, "");
        std::fprintf(stderr, "# wall_ms=%.3f\n", ms);
        return out_rc;
    }
    if (cat->parsed()) {
        if (cat_list->parsed()) {
            StringHolder listing;
            listing.p = xalg_catalog_list();
            if (listing.p) std::cout << listing.p;
            return listing.p ? 0 : 2;
        }
        if (cat_emit->parsed()) {
            xalg_status st = xalg_catalog_emit(sub.c_str(), &report.p);
            return emit(st, report.p, "");
        }
    }
    return 2;
}
