#pragma once

#include <charconv>
#include <string>

namespace zfp {

// Shortest decimal that round-trips to the same double.
inline std::string format_shortest(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace zfp
