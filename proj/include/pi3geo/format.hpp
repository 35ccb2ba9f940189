#pragma once

// Locale-independent, deterministic double formatting ('.' decimal separator).

#include <charconv>
#include <string>
#include <system_error>

namespace pi3 {

/// Shortest representation that round-trips to the same double.
inline std::string fmt_shortest(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

/// General format with a fixed number of significant digits (printf %g style,
/// trailing zeros stripped).
inline std::string fmt_general(double x, int significant_digits) {
  char buf[48];
  auto res = std::to_chars(buf, buf + sizeof(buf), x,
                           std::chars_format::general, significant_digits);
  return std::string(buf, res.ptr);
}

}  // namespace pi3
