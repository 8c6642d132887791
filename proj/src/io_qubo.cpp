#include "twred/io.hpp"

#include "text.hpp"

#include <set>
#include <sstream>

namespace twred {

using detail::to_big;
using detail::to_int;

ParsedQubo parse_qubo(const std::string& text) {
  ParsedQubo out;
  long long n = -1, m = -1, lines = 0;
  std::set<Hamiltonian::Pair> seen;
  for (const auto& line : detail::tokenize(text)) {
    const auto& tok = line.tokens;
    if (tok[0][0] == 'c' || tok[0][0] == '#') continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError("duplicate header", line.number);
      if (tok.size() != 4 || tok[1] != "qubo") throw ParseError("expected 'p qubo n m'", line.number);
      n = to_int(tok[2], line.number);
      m = to_int(tok[3], line.number);
      if (n < 0 || m < 0) throw ParseError("negative count in header", line.number);
      out.h = Hamiltonian(static_cast<int>(n));
      continue;
    }
    if (n < 0) throw ParseError("term before the 'p qubo' header", line.number);
    if (tok.size() != 3) throw ParseError("expected 'i j w'", line.number);
    const long long i = to_int(tok[0], line.number), j = to_int(tok[1], line.number);
    if (i < 1 || j < i || j > n) throw ParseError("indices must satisfy 1 <= i <= j <= n", line.number);
    if (!seen.insert({static_cast<Var>(i), static_cast<Var>(j)}).second)
      out.warnings.push_back("line " + std::to_string(line.number) + ": repeated term " + tok[0] + " " + tok[1] +
                             " summed");
    out.h.add(static_cast<Var>(i), static_cast<Var>(j), to_big(tok[2], line.number));
    ++lines;
  }
  if (n < 0) throw ParseError("missing 'p qubo' header");
  if (lines != m)
    throw ParseError("header declares " + std::to_string(m) + " terms, found " + std::to_string(lines));
  return out;
}

std::string write_qubo(const Hamiltonian& h) {
  std::ostringstream os;
  os << "p qubo " << h.num_vars() << ' ' << h.num_terms() << '\n';
  for (const auto& [i, w] : h.linear_terms()) os << i << ' ' << i << ' ' << w << '\n';
  for (const auto& [p, w] : h.quadratic_terms()) os << p.first << ' ' << p.second << ' ' << w << '\n';
  return os.str();
}

}  // namespace twred
