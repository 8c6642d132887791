#include "twred/solve.hpp"

#include "bag_dp.hpp"
#include "twred/error.hpp"
#include "twred/graph.hpp"

#include <algorithm>
#include <cstdint>

namespace twred {

namespace {

using Mask = std::uint64_t;

void guard(int n, int max_vars) {
  const int limit = std::min(max_vars, 62);
  if (n > limit)
    throw SizeError("brute force limited to " + std::to_string(limit) + " variables, instance has " +
                    std::to_string(n));
}

// Bit of variable v in an enumeration mask (x1 is the highest bit).
Mask bit(int n, Var v) { return Mask{1} << (n - v); }

/// Weighted predicate over assignments: a clause (false when none of its
/// literal bits match) or a product term (true when all bits are set).
struct MaskTerm {
  Mask pos = 0, neg = 0;
  bool product = false;
  bool fires(Mask m) const { return product ? (m & pos) == pos : ((m & pos) | (~m & neg)) == 0; }
};

/// Minimizes the sum of the weights of firing terms. `hard` terms make an
/// assignment infeasible. Ties go to the smallest mask.
Optimum enumerate(int n, const std::vector<MaskTerm>& terms, const std::vector<Weight>& weights,
                  bool all_witnesses) {
  BigInt abs_sum = 0;
  for (const auto& w : weights)
    if (w.is_finite()) abs_sum += abs(w.value());
  const bool fast = abs_sum < (BigInt(1) << 60);
  std::vector<std::int64_t> small(weights.size(), 0);
  if (fast)
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i].is_finite()) small[i] = static_cast<std::int64_t>(weights[i].value());

  Weight best = Weight::infinity();
  std::int64_t best_small = 0;
  bool have = false;
  Mask best_mask = 0;
  std::vector<Mask> ties;
  const Mask end = Mask{1} << n;
  for (Mask m = 0; m < end; ++m) {
    bool feasible = true;
    std::int64_t acc = 0;
    BigInt big = 0;
    for (std::size_t i = 0; i < terms.size() && feasible; ++i) {
      if (!terms[i].fires(m)) continue;
      if (weights[i].is_infinite()) feasible = false;
      else if (fast) acc += small[i];
      else big += weights[i].value();
    }
    if (!feasible) continue;
    int cmp;
    if (!have) cmp = -1;
    else if (fast) cmp = acc < best_small ? -1 : (acc == best_small ? 0 : 1);
    else cmp = big < best.value() ? -1 : (big == best.value() ? 0 : 1);
    if (cmp < 0) {
      have = true;
      best_small = acc;
      best = fast ? Weight(BigInt(acc)) : Weight(big);
      best_mask = m;
      ties.clear();
    }
    if (cmp <= 0 && all_witnesses) ties.push_back(m);
  }
  Optimum o;
  o.value = best;
  o.witness = Assignment::from_mask(n, have ? best_mask : 0);
  if (all_witnesses && have)
    for (Mask m : ties) o.all_witnesses.push_back(Assignment::from_mask(n, m));
  return o;
}

std::vector<Vertex> sorted_vars(const Clause& c) {
  std::vector<Vertex> vs;
  for (const auto& l : c.literals) vs.push_back(l.var);
  std::sort(vs.begin(), vs.end());
  return vs;
}

Assignment to_assignment(const std::vector<bool>& value, int n) {
  return Assignment(std::vector<bool>(value.begin() + 1, value.begin() + 1 + n));
}

}  // namespace

Optimum brute_force_maxsat(const WeightedCnf& phi, const BruteForceOptions& opts) {
  phi.check();
  guard(phi.num_vars, opts.max_vars);
  std::vector<MaskTerm> terms;
  std::vector<Weight> weights;
  for (const auto& c : phi.clauses) {
    MaskTerm t;
    for (const auto& l : c.literals) (l.negative ? t.neg : t.pos) |= bit(phi.num_vars, l.var);
    terms.push_back(t);
    weights.push_back(c.weight);
  }
  return enumerate(phi.num_vars, terms, weights, opts.all_witnesses);
}

Optimum brute_force_qubo(const Hamiltonian& h, const BruteForceOptions& opts) {
  const int n = h.num_vars();
  guard(n, opts.max_vars);
  std::vector<MaskTerm> terms;
  std::vector<Weight> weights;
  for (const auto& [i, w] : h.linear_terms()) {
    terms.push_back({bit(n, i), 0, true});
    weights.push_back(w);
  }
  for (const auto& [p, w] : h.quadratic_terms()) {
    terms.push_back({bit(n, p.first) | bit(n, p.second), 0, true});
    weights.push_back(w);
  }
  return enumerate(n, terms, weights, opts.all_witnesses);
}

Optimum dp_maxsat_primal(const WeightedCnf& phi, const TreeDecomposition& td) {
  phi.check();
  require_valid(primal_graph(phi), td, "primal decomposition");
  std::vector<std::vector<Vertex>> vars;
  std::vector<std::pair<Mask, Mask>> sign;  // bits of positive / negative literals
  for (const auto& c : phi.clauses) {
    auto vs = sorted_vars(c);
    Mask pos = 0, neg = 0;
    for (const auto& l : c.literals) {
      Mask b = Mask{1} << (std::lower_bound(vs.begin(), vs.end(), l.var) - vs.begin());
      (l.negative ? neg : pos) |= b;
    }
    vars.push_back(std::move(vs));
    sign.push_back({pos, neg});
  }
  auto eval = [&](std::size_t f, Mask bits) -> Weight {
    const auto [pos, neg] = sign[f];
    return ((bits & pos) | (~bits & neg)) ? Weight(0) : phi.clauses[f].weight;
  };
  detail::BagDp<detail::MinPlus, decltype(eval)> dp(td, phi.num_vars, vars, eval);
  Optimum o;
  o.value = dp.run();
  o.witness = to_assignment(dp.best_assignment(), phi.num_vars);
  o.max_table_entries = dp.max_table_entries();
  return o;
}

Optimum dp_qubo_primal(const Hamiltonian& h, const TreeDecomposition& td) {
  require_valid(primal_graph(h), td, "primal decomposition");
  std::vector<std::vector<Vertex>> vars;
  std::vector<BigInt> weight;
  for (const auto& [i, w] : h.linear_terms()) {
    vars.push_back({i});
    weight.push_back(w);
  }
  for (const auto& [p, w] : h.quadratic_terms()) {
    vars.push_back({p.first, p.second});
    weight.push_back(w);
  }
  auto eval = [&](std::size_t f, Mask bits) -> Weight {
    const Mask all = (Mask{1} << vars[f].size()) - 1;
    return bits == all ? Weight(weight[f]) : Weight(0);
  };
  detail::BagDp<detail::MinPlus, decltype(eval)> dp(td, h.num_vars(), vars, eval);
  Optimum o;
  o.value = dp.run();
  o.witness = to_assignment(dp.best_assignment(), h.num_vars());
  o.max_table_entries = dp.max_table_entries();
  return o;
}

Optimum solve_binary_via_primal(const WeightedCnf& phi) {
  if (!phi.is_binary()) throw PreconditionError("solve_binary_via_primal needs at most two literals per clause");
  return dp_maxsat_primal(phi, heuristic_td(primal_graph(phi)));
}

}  // namespace twred
