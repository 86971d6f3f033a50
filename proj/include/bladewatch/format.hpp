#pragma once

// Shortest text form that parses back to the same double.

#include <charconv>
#include <string>

namespace bladewatch {

inline void append_number(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

inline std::string format_number(double v) {
  std::string out;
  append_number(out, v);
  return out;
}

}  // namespace bladewatch
