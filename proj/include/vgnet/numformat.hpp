#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace vgnet {

/// Shortest decimal string that round-trips to the same double (to_chars
/// shortest form): stable across runs, no locale or precision surprises.
/// NaN renders as the empty string, the CSV convention for undefined cells.
inline std::string double_to_string(double x) {
  if (std::isnan(x)) return "";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline std::string hex_u64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
  return std::string(buf);
}

}  // namespace vgnet
