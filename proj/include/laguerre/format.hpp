#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace laguerre {

// Shortest decimal representation that round-trips; keeps CSV output
// byte-stable across reruns.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace laguerre
