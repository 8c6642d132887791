#pragma once

#include "twred/error.hpp"
#include "twred/weight.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

namespace twred::detail {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

/// Non-empty lines split on whitespace, with 1-based line numbers.
inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline long long to_int(const std::string& s, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("expected an integer, got '" + s + "'", line);
  return v;
}

inline BigInt to_big(const std::string& s, int line) {
  std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw ParseError("expected an integer, got '" + s + "'", line);
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw ParseError("expected an integer, got '" + s + "'", line);
  BigInt v(s.substr(i));
  return s[0] == '-' ? BigInt(-v) : v;
}

}  // namespace twred::detail
