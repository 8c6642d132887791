#include "twred/io.hpp"

#include "text.hpp"

#include <fstream>
#include <sstream>

namespace twred {

using detail::to_big;
using detail::to_int;

namespace {

std::vector<Literal> read_literals(const detail::Line& line, std::size_t from, int max_var) {
  const auto& tok = line.tokens;
  if (tok.back() != "0") throw ParseError("clause must end with 0", line.number);
  std::vector<Literal> lits;
  for (std::size_t i = from; i + 1 < tok.size(); ++i) {
    long long v = to_int(tok[i], line.number);
    if (v == 0) throw ParseError("literal 0 inside a clause", line.number);
    if (max_var >= 0 && (v > max_var || -v > max_var))
      throw ParseError("literal " + tok[i] + " out of range", line.number);
    if (v > 1000000000LL || v < -1000000000LL) throw ParseError("literal " + tok[i] + " out of range", line.number);
    lits.push_back(Literal::from_dimacs(v));
  }
  return lits;
}

}  // namespace

ParsedWcnf parse_wcnf(const std::string& text) {
  ParsedWcnf out;
  WeightedCnf& phi = out.formula;
  enum class Mode { kNone, kOld, kCnf } mode = Mode::kNone;
  std::optional<BigInt> top;
  long long declared_vars = -1, declared_clauses = -1, hinted_vars = 0;
  bool seen_clause = false;
  for (const auto& line : detail::tokenize(text)) {
    const auto& tok = line.tokens;
    if (tok[0] == "c" || tok[0][0] == 'c' || tok[0][0] == '#') {
      if (tok.size() == 3 && tok[0] == "c" && tok[1] == "vars") hinted_vars = to_int(tok[2], line.number);
      continue;
    }
    if (tok[0] == "p") {
      if (mode != Mode::kNone || seen_clause) throw ParseError("unexpected header", line.number);
      if (tok.size() < 4) throw ParseError("malformed header", line.number);
      if (tok[1] == "wcnf") {
        mode = Mode::kOld;
        if (tok.size() > 5) throw ParseError("malformed header", line.number);
        if (tok.size() == 5) top = to_big(tok[4], line.number);
      } else if (tok[1] == "cnf") {
        mode = Mode::kCnf;
        if (tok.size() != 4) throw ParseError("malformed header", line.number);
      } else {
        throw ParseError("unknown format '" + tok[1] + "'", line.number);
      }
      declared_vars = to_int(tok[2], line.number);
      declared_clauses = to_int(tok[3], line.number);
      if (declared_vars < 0 || declared_clauses < 0) throw ParseError("negative count in header", line.number);
      continue;
    }
    seen_clause = true;
    const int max_var = static_cast<int>(declared_vars);
    if (mode == Mode::kCnf) {
      phi.add(read_literals(line, 0, max_var), Weight::infinity());
    } else if (mode == Mode::kOld) {
      if (tok.size() < 2) throw ParseError("clause without weight", line.number);
      BigInt w = to_big(tok[0], line.number);
      auto lits = read_literals(line, 1, max_var);
      if (top && w == *top) phi.add(std::move(lits), Weight::infinity());
      else if (top && w > *top) throw ParseError("weight " + tok[0] + " exceeds top " + top->str(), line.number);
      else phi.add(std::move(lits), w);
    } else {
      if (tok.size() < 2) throw ParseError("clause without weight", line.number);
      if (tok[0] == "h") {
        phi.add(read_literals(line, 1, -1), Weight::infinity());
      } else {
        BigInt w = to_big(tok[0], line.number);
        phi.add(read_literals(line, 1, -1), w);
      }
    }
  }
  out.flavor = mode == Mode::kNone ? WcnfFlavor::k2022 : WcnfFlavor::kOld;
  if (mode != Mode::kNone) {
    phi.num_vars = static_cast<int>(declared_vars);
    if (declared_clauses != static_cast<long long>(phi.clauses.size()))
      out.warnings.push_back("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                             std::to_string(phi.clauses.size()));
  } else {
    int m = 0;
    for (const auto& c : phi.clauses)
      for (const auto& l : c.literals) m = std::max(m, l.var);
    phi.num_vars = std::max<int>(m, static_cast<int>(hinted_vars));
  }
  auto norm = normalize(phi);
  out.formula = std::move(norm.formula);
  out.warnings.insert(out.warnings.end(), norm.warnings.begin(), norm.warnings.end());
  try {
    out.formula.check();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return out;
}

std::string write_wcnf(const WeightedCnf& phi, WcnfFlavor flavor) {
  std::ostringstream os;
  auto lits = [&](const Clause& c) {
    for (const auto& l : c.literals) os << ' ' << l.to_dimacs();
    os << " 0\n";
  };
  if (flavor == WcnfFlavor::kOld) {
    BigInt top = 1;
    for (const auto& c : phi.clauses)
      if (c.is_soft()) top += abs(c.weight.value());
    os << "p wcnf " << phi.num_vars << ' ' << phi.clauses.size() << ' ' << top << '\n';
    for (const auto& c : phi.clauses) {
      os << (c.is_hard() ? top : c.weight.value());
      lits(c);
    }
  } else {
    os << "c vars " << phi.num_vars << '\n';
    for (const auto& c : phi.clauses) {
      if (c.is_hard()) os << 'h';
      else os << c.weight.value();
      lits(c);
    }
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
  if (!out) throw ParseError("write failed for " + path);
}

}  // namespace twred
