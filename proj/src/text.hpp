#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "fusscat/errors.hpp"

namespace fusscat::detail {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace fusscat::detail
