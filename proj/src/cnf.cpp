#include "twred/cnf.hpp"

#include "twred/error.hpp"

#include <algorithm>
#include <set>

namespace twred {

Literal Literal::from_dimacs(long long lit) {
  if (lit == 0) throw PreconditionError("literal 0");
  return lit > 0 ? pos(static_cast<Var>(lit)) : neg(static_cast<Var>(-lit));
}

Assignment Assignment::from_mask(int num_vars, std::uint64_t mask) {
  Assignment a(num_vars);
  for (Var v = 1; v <= num_vars; ++v) a.set(v, (mask >> (num_vars - v)) & 1U);
  return a;
}

bool WeightedCnf::is_monotone() const {
  for (const auto& c : clauses)
    for (const auto& l : c.literals)
      if (!l.negative) return false;
  return true;
}

bool WeightedCnf::has_hard() const {
  return std::any_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.is_hard(); });
}

bool WeightedCnf::all_hard() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.is_hard(); });
}

std::size_t WeightedCnf::max_clause_size() const {
  std::size_t m = 0;
  for (const auto& c : clauses) m = std::max(m, c.size());
  return m;
}

std::size_t WeightedCnf::total_literals() const {
  std::size_t t = 0;
  for (const auto& c : clauses) t += c.size();
  return t;
}

BigInt WeightedCnf::soft_weight_sum() const {
  BigInt s = 0;
  for (const auto& c : clauses)
    if (c.is_soft()) s += c.weight.value();
  return s;
}

void WeightedCnf::check() const {
  const bool mono = is_monotone();
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    const auto& c = clauses[k];
    std::set<Var> seen;
    for (const auto& l : c.literals) {
      if (l.var < 1 || l.var > num_vars)
        throw PreconditionError("clause " + std::to_string(k) + ": variable " +
                                std::to_string(l.var) + " out of range");
      if (!seen.insert(l.var).second)
        throw PreconditionError("clause " + std::to_string(k) + ": variable " +
                                std::to_string(l.var) + " occurs twice");
    }
    if (!mono && c.is_soft() && c.weight.value() < 0)
      throw PreconditionError("clause " + std::to_string(k) +
                              ": negative weight in a non-monotone formula");
  }
}

bool satisfies(const Assignment& beta, const Clause& c) {
  return std::any_of(c.literals.begin(), c.literals.end(),
                     [&](const Literal& l) { return beta.satisfies(l); });
}

Weight cost(const WeightedCnf& phi, const Assignment& beta) {
  if (beta.size() != phi.num_vars)
    throw DomainError("assignment over " + std::to_string(beta.size()) + " variables, formula has " +
                      std::to_string(phi.num_vars));
  Weight total = 0;
  for (const auto& c : phi.clauses)
    if (!satisfies(beta, c)) total += c.weight;
  return total;
}

NormalizeResult normalize(const WeightedCnf& phi) {
  NormalizeResult out;
  out.formula.num_vars = phi.num_vars;
  for (std::size_t k = 0; k < phi.clauses.size(); ++k) {
    const auto& c = phi.clauses[k];
    std::vector<Literal> lits;
    bool tautology = false, repeated = false;
    for (const auto& l : c.literals) {
      if (std::find(lits.begin(), lits.end(), l) != lits.end()) {
        repeated = true;
        continue;
      }
      if (std::find(lits.begin(), lits.end(), ~l) != lits.end()) tautology = true;
      lits.push_back(l);
    }
    if (tautology) {
      out.warnings.push_back("clause " + std::to_string(k) + " is a tautology, dropped");
      continue;
    }
    if (repeated) out.warnings.push_back("clause " + std::to_string(k) + ": repeated literal removed");
    out.formula.add(std::move(lits), c.weight);
  }
  return out;
}

}  // namespace twred
