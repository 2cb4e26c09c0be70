#include "xalg/xalg.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace xalg;

struct xalg_bundle {
    Bundle bundle;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_out(char** slot, const std::string& s) {
    if (slot) *slot = dup_string(s);
}

xalg_status run(const CommandResult& r, char** report) {
    set_out(report, r.out);
    return static_cast<xalg_status>(r.rc);
}

const Bundle* unwrap(const xalg_bundle* b) { return b ? &b->bundle : nullptr; }

}  // namespace

extern "C" {

const char* xalg_version(void) { return "1.0.0"; }

int xalg_size_limit(void) { return size_limit(); }

xalg_bundle* xalg_bundle_parse(const char* text, char** error_message) {
    if (error_message) *error_message = nullptr;
    if (!text) {
        set_out(error_message, "error: ShapeError: null input");
        return nullptr;
    }
    try {
        Bundle b = parse_bundle(text);
        return new xalg_bundle{std::move(b)};
    } catch (const Error& e) {
        set_out(error_message, std::string("error: ") + e.tag() + ": " + e.what());
        return nullptr;
    } catch (const std::exception& e) {
        set_out(error_message, std::string("error: InternalError: ") + e.what());
        return nullptr;
    }
}

xalg_bundle* xalg_bundle_parse_file(const char* path, char** error_message) {
    if (error_message) *error_message = nullptr;
    if (!path) {
        set_out(error_message, "error: ShapeError: null path");
        return nullptr;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        set_out(error_message, std::string("error: FileError: cannot read '") + path + "'");
        return nullptr;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return xalg_bundle_parse(ss.str().c_str(), error_message);
}

xalg_bundle* xalg_catalog_bundle(void) {
    try {
        return new xalg_bundle{catalog_bundle()};
    } catch (...) {
        return nullptr;
    }
}

char* xalg_bundle_serialize(const xalg_bundle* bundle) {
    if (!bundle) return nullptr;
    try {
        return dup_string(serialize_bundle(bundle->bundle));
    } catch (...) {
        return nullptr;
    }
}

void xalg_bundle_free(xalg_bundle* bundle) { delete bundle; }

void xalg_string_free(char* text) { std::free(text); }

xalg_status xalg_check(const xalg_bundle* bundle, const char* kind, const char* name,
                       char** report) {
    if (!kind || !name) {
        set_out(report, "error: ShapeError: null argument\n");
        return XALG_INPUT_ERROR;
    }
    try {
        return run(cmd_check(unwrap(bundle), kind, name), report);
    } catch (const std::exception& e) {
        set_out(report, std::string("error: InternalError: ") + e.what() + "\n");
        return XALG_CHECK_FAILED;
    }
}

xalg_status xalg_convert(const xalg_bundle* bundle, const char* functor, const char* name,
                         char** output) {
    if (!functor || !name) {
        set_out(output, "error: ShapeError: null argument\n");
        return XALG_INPUT_ERROR;
    }
    try {
        return run(cmd_convert(unwrap(bundle), functor, name), output);
    } catch (const std::exception& e) {
        set_out(output, std::string("error: InternalError: ") + e.what() + "\n");
        return XALG_CHECK_FAILED;
    }
}

xalg_status xalg_roundtrip(const xalg_bundle* bundle, const char* kind, const char* name,
                           char** report) {
    if (!kind || !name) {
        set_out(report, "error: ShapeError: null argument\n");
        return XALG_INPUT_ERROR;
    }
    try {
        return run(cmd_roundtrip(unwrap(bundle), kind, name), report);
    } catch (const std::exception& e) {
        set_out(report, std::string("error: InternalError: ") + e.what() + "\n");
        return XALG_CHECK_FAILED;
    }
}

xalg_status xalg_enumerate(const char* kind, const char* group_a, const char* group_b,
                           int classify, char** report) {
    if (!kind || !group_a || !group_b) {
        set_out(report, "error: ShapeError: null argument\n");
        return XALG_INPUT_ERROR;
    }
    try {
        return run(cmd_enumerate(kind, group_a, group_b, classify != 0), report);
    } catch (const std::exception& e) {
        set_out(report, std::string("error: InternalError: ") + e.what() + "\n");
        return XALG_CHECK_FAILED;
    }
}

char* xalg_catalog_list(void) {
    try {
        return dup_string(cmd_catalog_list().out);
    } catch (...) {
        return nullptr;
    }
}

xalg_status xalg_catalog_emit(const char* name, char** output) {
    if (!name) {
        set_out(output, "error: ShapeError: null argument\n");
        return XALG_INPUT_ERROR;
    }
    try {
        return run(cmd_catalog_emit(name), output);
    } catch (const std::exception& e) {
        set_out(output, std::string("error: InternalError: ") + e.what() + "\n");
        return XALG_CHECK_FAILED;
    }
}

}  // extern "C"
