#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hvlie::detail {

/// Shared scanner for the canonical text forms.
struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }

  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool lookahead(const char* lit) const {
    return s.compare(pos, std::char_traits<char>::length(lit), lit) == 0;
  }

  bool eat_lit(const char* lit) {
    if (!lookahead(lit)) return false;
    pos += std::char_traits<char>::length(lit);
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) +
                                ": " + what + " in \"" + s + "\"");
  }

  /// Token of digits, '-' and '/' for parse_rational to digest.
  std::string read_number_token() {
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) {
      ++pos;
    }
    if (pos == start) fail("expected number");
    return s.substr(start, pos - start);
  }

  std::int64_t read_int() {
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }

  void expect_end() {
    skip_ws();
    if (pos != s.size()) fail("trailing input");
  }
};

}  // namespace hvlie::detail
