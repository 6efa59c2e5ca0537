#pragma once

#include <charconv>
#include <string>

namespace pomdp {

/// Shortest decimal string that round-trips the double exactly. All file
/// writers use this so dumps are lossless and locale-independent.
inline std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

/// Fixed-point seconds with millisecond resolution, for report columns.
inline std::string format_seconds(double seconds) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", seconds);
    return std::string(buf);
}

}  // namespace pomdp
