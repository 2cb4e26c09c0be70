#include "common.hpp"

#include <algorithm>
#include <cstdlib>

namespace xalg {

Error input_error(const std::string& tag, const std::string& message) {
    return Error(tag, message, {}, 2);
}

Error internal_error(const std::string& message) {
    return Error("InternalError", message, {}, 1);
}

std::string witness_string(const std::vector<int>& w) {
    std::string out = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    out += ")";
    return out;
}

namespace {
int g_size_floor = 0;
}

int size_limit() {
    int limit = 64;
    if (const char* env = std::getenv("XALG_SIZE_LIMIT"); env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) limit = static_cast<int>(std::min<long>(v, 1 << 20));
    }
    return limit < g_size_floor ? g_size_floor : limit;
}

SizeLimitFloor::SizeLimitFloor(int floor) : previous_(g_size_floor) {
    if (floor > g_size_floor) g_size_floor = floor;
}

SizeLimitFloor::~SizeLimitFloor() { g_size_floor = previous_; }

}  // namespace xalg
