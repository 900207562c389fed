#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

namespace fdbench {

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Fixed-point with `digits` decimals, for human-facing tables.
inline std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

/// Parses a double; accepts "nan" (any case) as the missing sentinel.
/// Returns false when the text is not a complete number.
inline bool parse_double(std::string_view text, double& out) {
    if (text.size() == 3 &&
        (text[0] == 'n' || text[0] == 'N') &&
        (text[1] == 'a' || text[1] == 'A') &&
        (text[2] == 'n' || text[2] == 'N')) {
        out = std::nan("");
        return true;
    }
    auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    return res.ec == std::errc{} && res.ptr == text.data() + text.size();
}

} // namespace fdbench
