#pragma once

#include <charconv>
#include <string>

namespace normeuclid {

/// Locale-independent rendering with `digits` significant digits.
inline std::string fmt(double x, int digits = 15) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

}  // namespace normeuclid
