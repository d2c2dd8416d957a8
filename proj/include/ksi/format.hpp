#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace ksi {

/// Locale-independent float formatting with `precision` significant digits
/// (printf "%.{precision}g" semantics). Non-finite values print as nan/inf/-inf.
inline std::string format_float(double value, int precision = 12) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
    return {buf, res.ptr};
}

/// Shortest representation that round-trips.
inline std::string format_float_exact(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return {buf, res.ptr};
}

}  // namespace ksi
