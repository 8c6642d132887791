#include "twred/io.hpp"

#include "text.hpp"

#include <sstream>

namespace twred {

using detail::to_big;
using detail::to_int;

namespace {

std::string opt(const std::optional<Weight>& w) { return w ? w->to_string() : "none"; }

std::optional<Weight> read_opt(const std::string& s, int line) {
  if (s == "none") return std::nullopt;
  if (s == "inf") return Weight::infinity();
  return Weight(to_big(s, line));
}

}  // namespace

std::string write_trace(const ReductionTrace& t) {
  std::ostringstream os;
  os << "c twred trace\n";
  os << "input_vars " << t.input_vars << '\n';
  os << "output_vars " << t.output_vars << '\n';
  os << "offset " << t.offset << '\n';
  os << "h " << opt(t.h) << '\n';
  os << "theta " << opt(t.theta) << '\n';
  os << "sat_threshold " << opt(t.sat_threshold) << '\n';
  for (int i = 0; i < t.input_vars; ++i) os << "map " << i + 1 << ' ' << t.back_map[i] << '\n';
  for (const auto& f : t.fresh) os << "fresh " << f.var << ' ' << f.rule << ' ' << f.origin << '\n';
  for (const auto& note : t.notes) os << "note " << note << '\n';
  return os.str();
}

ReductionTrace parse_trace(const std::string& text) {
  ReductionTrace t;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key) || key == "c") continue;
    if (key == "note") {
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
      t.notes.push_back(rest);
      continue;
    }
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    auto need = [&](std::size_t k) {
      if (tok.size() != k) throw ParseError("malformed '" + key + "' line", number);
    };
    if (key == "input_vars") {
      need(1);
      t.input_vars = static_cast<int>(to_int(tok[0], number));
      if (t.input_vars < 0) throw ParseError("negative variable count", number);
      t.back_map.assign(t.input_vars, 0);
    } else if (key == "output_vars") {
      need(1);
      t.output_vars = static_cast<int>(to_int(tok[0], number));
    } else if (key == "offset") {
      need(1);
      t.offset = to_big(tok[0], number);
    } else if (key == "h") {
      need(1);
      t.h = read_opt(tok[0], number);
    } else if (key == "theta") {
      need(1);
      t.theta = read_opt(tok[0], number);
    } else if (key == "sat_threshold") {
      need(1);
      t.sat_threshold = read_opt(tok[0], number);
    } else if (key == "map") {
      need(2);
      long long in_var = to_int(tok[0], number), out_var = to_int(tok[1], number);
      if (in_var < 1 || in_var > t.input_vars || out_var < 0 || out_var > t.output_vars)
        throw ParseError("map entry out of range", number);
      t.back_map[in_var - 1] = static_cast<Var>(out_var);
    } else if (key == "fresh") {
      need(3);
      t.fresh.push_back({static_cast<Var>(to_int(tok[0], number)), tok[1], static_cast<long>(to_int(tok[2], number))});
    } else {
      throw ParseError("unknown trace key '" + key + "'", number);
    }
  }
  return t;
}

std::map<Var, int> parse_classes(const std::string& text) {
  std::map<Var, int> out;
  for (const auto& line : detail::tokenize(text)) {
    const auto& tok = line.tokens;
    if (tok[0] == "c" || tok[0][0] == '#') continue;
    if (tok.size() != 2) throw ParseError("expected 'var rank'", line.number);
    long long v = to_int(tok[0], line.number);
    if (v < 1) throw ParseError("variable must be positive", line.number);
    if (!out.emplace(static_cast<Var>(v), static_cast<int>(to_int(tok[1], line.number))).second)
      throw ParseError("variable " + tok[0] + " listed twice", line.number);
  }
  return out;
}

}  // namespace twred
