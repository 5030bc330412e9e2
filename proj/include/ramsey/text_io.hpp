#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/error.hpp"

namespace ramsey {

/// Reads a line-oriented text format, counting lines and skipping blank and
/// `#` comment lines.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next significant line, or false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t line_number() const noexcept { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_no_); }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

/// Parses an integer token, raising a ParseError tagged with the reader's line.
template <typename Int>
Int parse_int(std::string_view token, const LineReader& reader, const char* what) {
  Int value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) reader.fail(std::string("expected integer ") + what + ", got '" +
                                                    std::string(token) + "'");
  return value;
}

}  // namespace ramsey
