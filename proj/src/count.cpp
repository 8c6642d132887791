#include "twred/count.hpp"

#include "bag_dp.hpp"
#include "twred/error.hpp"
#include "twred/graph.hpp"
#include "witness.hpp"

#include <algorithm>
#include <set>

namespace twred {

BigInt VarWeightedCnf::total_weight() const {
  BigInt s = 0;
  for (const auto& w : var_weight) s += w;
  return s;
}

BigInt VarWeightedCnf::weight_of(const Assignment& beta) const {
  if (beta.size() != cnf.num_vars) throw DomainError("assignment size does not match the formula");
  BigInt s = 0;
  for (Var v = 1; v <= cnf.num_vars; ++v)
    if (beta[v]) s += weight(v);
  return s;
}

void VarWeightedCnf::check() const {
  cnf.check();
  if (!cnf.all_hard()) throw PreconditionError("variable-weighted formula must be all hard");
  if (static_cast<int>(var_weight.size()) != cnf.num_vars)
    throw PreconditionError("one weight per variable expected");
  for (const auto& w : var_weight)
    if (w < 0) throw PreconditionError("negative variable weight");
}

BigInt dp_count(const WeightedCnf& psi, const TreeDecomposition& td) {
  psi.check();
  if (!psi.all_hard()) throw PreconditionError("model counting needs an all-hard formula");
  require_valid(primal_graph(psi), td, "primal decomposition");
  std::vector<std::vector<Vertex>> vars;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sign;
  for (const auto& c : psi.clauses) {
    std::vector<Vertex> vs = detail::vars_of(c);
    std::uint64_t pos = 0, neg = 0;
    for (const auto& l : c.literals) {
      std::uint64_t b = std::uint64_t{1} << (std::lower_bound(vs.begin(), vs.end(), l.var) - vs.begin());
      (l.negative ? neg : pos) |= b;
    }
    vars.push_back(std::move(vs));
    sign.push_back({pos, neg});
  }
  auto eval = [&](std::size_t f, std::uint64_t bits) -> BigInt {
    const auto [pos, neg] = sign[f];
    return ((bits & pos) | (~bits & neg)) ? 1 : 0;
  };
  detail::BagDp<detail::SumProduct, decltype(eval)> dp(td, psi.num_vars, vars, eval);
  return dp.run();
}

BigInt model_count(const WeightedCnf& psi) { return dp_count(psi, heuristic_td(primal_graph(psi))); }

VarWeightedResult to_var_weighted(const WeightedCnf& phi) {
  phi.check();
  VarWeightedResult r;
  r.vw.cnf = phi;
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const auto& c = phi.clauses[j];
    if (c.is_hard()) continue;
    if (c.weight.value() < 0) throw PreconditionError("clause " + std::to_string(j) + ": negative weight");
    const Var a = r.vw.cnf.fresh_var();
    r.vw.cnf.clauses[j].literals.push_back(Literal::neg(a));
    r.vw.cnf.clauses[j].weight = Weight::infinity();
    r.trace.fresh.push_back({a, "weight", static_cast<long>(j)});
    r.total_soft_weight += c.weight.value();
  }
  r.vw.var_weight.assign(r.vw.cnf.num_vars, 0);
  for (const auto& f : r.trace.fresh) r.vw.var_weight[f.var - 1] = phi.clauses[f.origin].weight.value();
  auto fresh = std::move(r.trace.fresh);
  r.trace = detail::extend_trace(phi.num_vars, r.vw.cnf.num_vars);
  r.trace.fresh = std::move(fresh);
  return r;
}

namespace {

// Adds `count` fresh variables per selected variable x with clauses built by
// `make(x, w)`; the incidence witness grows by chains {x, c}, {c, w}.
struct Expansion {
  WeightedCnf cnf;
  std::vector<Var> parent;  // per fresh variable, the variable it hangs off
  std::optional<TreeDecomposition> td;
};

template <class Make>
Expansion expand(const WeightedCnf& base, const std::vector<std::pair<Var, BigInt>>& plan,
                 const std::optional<TreeDecomposition>& td_inc, Make make) {
  if (td_inc) require_valid(incidence_graph(base), *td_inc, "incidence decomposition");
  Expansion e;
  e.cnf = base;
  struct Link {
    Var x, w;
    std::size_t clause;
  };
  std::vector<Link> links;
  for (const auto& [x, count] : plan)
    for (BigInt i = 0; i < count; ++i) {
      const Var w = e.cnf.fresh_var();
      links.push_back({x, w, e.cnf.clauses.size()});
      e.cnf.add(make(x, w), Weight::infinity());
      e.parent.push_back(x);
    }
  if (td_inc) {
    auto ed = detail::TdEditor::incidence(*td_inc, base.num_vars);
    for (const auto& l : links) {
      const Vertex c = detail::clause_sym(l.clause);
      NodeId t = ed.attach_to({l.x}, {l.x, c});
      ed.attach(t, {c, l.w});
    }
    e.td = ed.release_incidence(e.cnf.num_vars);
  }
  return e;
}

}  // namespace

VarWeightedStep elim_unary(const VarWeightedCnf& vw, const std::optional<TreeDecomposition>& td_inc) {
  vw.check();
  std::vector<std::pair<Var, BigInt>> plan;
  for (Var x = 1; x <= vw.cnf.num_vars; ++x)
    if (vw.weight(x) > 1) plan.push_back({x, vw.weight(x)});
  auto e = expand(vw.cnf, plan, td_inc, [](Var x, Var w) {
    return std::vector<Literal>{Literal::pos(x), Literal::neg(w)};
  });
  VarWeightedStep s;
  s.vw.cnf = std::move(e.cnf);
  s.vw.var_weight = vw.var_weight;
  for (const auto& [x, _] : plan) s.vw.var_weight[x - 1] = 0;
  s.vw.var_weight.resize(s.vw.cnf.num_vars, 1);
  s.td_incidence = std::move(e.td);
  return s;
}

CountEncoding encode_weight_one(const VarWeightedCnf& vw, std::optional<int> m,
                                const std::optional<TreeDecomposition>& td_inc) {
  vw.check();
  const int mult = m ? *m : vw.cnf.num_vars + 1;
  if (mult < 1) throw PreconditionError("multiplier must be positive");
  std::vector<std::pair<Var, BigInt>> plan;
  for (Var x = 1; x <= vw.cnf.num_vars; ++x) {
    if (vw.weight(x) > 1) throw PreconditionError("variable " + std::to_string(x) + " has weight above one");
    if (vw.weight(x) == 1) plan.push_back({x, mult});
  }
  auto e = expand(vw.cnf, plan, td_inc, [](Var x, Var w) {
    return std::vector<Literal>{Literal::pos(x), Literal::pos(w)};
  });
  return {std::move(e.cnf), mult, std::move(e.td)};
}

namespace {

bool passes(const BigInt& count, const BigInt& w, int m) {
  return (count >> static_cast<unsigned>(w * m)) != 0;
}

}  // namespace

std::optional<BigInt> max_weight_from_count(const BigInt& count, int m) {
  if (count <= 0) return std::nullopt;
  // floor(count / 2^(w*m)) > 0 is monotone in w.
  BigInt lo = 0, hi = 1;
  while (passes(count, hi, m)) hi *= 2;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    (passes(count, mid, m) ? lo : hi) = mid;
  }
  return lo;
}

namespace {

/// Largest w(b) over models of a variable-weighted formula, or nullopt when unsatisfiable.
std::optional<BigInt> max_weight_unary(const VarWeightedCnf& vw) {
  auto step = elim_unary(vw);
  auto enc = encode_weight_one(step.vw);
  const BigInt count = model_count(enc.cnf);
  if (count == 0) return std::nullopt;
  // Scan down from the total weight.
  for (BigInt w = step.vw.total_weight(); w >= 0; --w)
    if (passes(count, w, enc.multiplier_bits)) return w;
  throw InvariantError("positive count without a passing weight");
}

std::optional<BigInt> max_exponent(const VarWeightedCnf& vw) {
  std::vector<std::pair<Var, BigInt>> plan;
  const int m = vw.cnf.num_vars + 1;
  for (Var x = 1; x <= vw.cnf.num_vars; ++x)
    if (vw.weight(x) > 0) plan.push_back({x, vw.weight(x) * m});
  auto e = expand(vw.cnf, plan, std::nullopt, [](Var x, Var w) {
    return std::vector<Literal>{Literal::pos(x), Literal::pos(w)};
  });
  return max_weight_from_count(model_count(e.cnf), m);
}

// Fixes variables 1..k one at a time (false first) while the optimum is kept.
template <class Best>
Assignment self_reduce(const VarWeightedCnf& vw, int k, const BigInt& target, Best best) {
  VarWeightedCnf cur = vw;
  Assignment beta(k);
  for (Var v = 1; v <= k; ++v) {
    VarWeightedCnf trial = cur;
    trial.cnf.add({Literal::neg(v)}, Weight::infinity());
    auto b = best(trial);
    if (b && *b == target) {
      cur = std::move(trial);
      continue;
    }
    cur.cnf.add({Literal::pos(v)}, Weight::infinity());
    beta.set(v, true);
  }
  return beta;
}

}  // namespace

Optimum solve_unary(const WeightedCnf& phi) {
  auto vr = to_var_weighted(phi);
  Optimum o;
  auto best = max_weight_unary(vr.vw);
  if (!best) {
    o.value = Weight::infinity();
    o.witness = Assignment(phi.num_vars);
    return o;
  }
  o.value = Weight(vr.total_soft_weight - *best);
  // The auxiliaries follow from the original variables, so only those are fixed.
  o.witness = self_reduce(vr.vw, phi.num_vars, *best, max_weight_unary);
  return o;
}

MaxWeightOptimum solve_mult(const VarWeightedCnf& exponents) {
  exponents.check();
  MaxWeightOptimum r;
  auto best = max_exponent(exponents);
  if (!best) {
    r.witness = Assignment(exponents.cnf.num_vars);
    return r;
  }
  r.satisfiable = true;
  r.max_weight = *best;
  r.witness = self_reduce(exponents, exponents.cnf.num_vars, *best, max_exponent);
  return r;
}

MaxWeightOptimum solve_lex(const WeightedCnf& hard_cnf, const std::map<Var, int>& class_rank) {
  std::set<int> ranks;
  for (const auto& [v, r] : class_rank) {
    if (v < 1 || v > hard_cnf.num_vars) throw PreconditionError("class for unknown variable " + std::to_string(v));
    ranks.insert(r);
  }
  // A variable of class index i outweighs all variables of lower classes together.
  const BigInt base = hard_cnf.num_vars + 1;
  std::map<int, BigInt> exponent;
  BigInt e = 1;
  for (int r : ranks) {
    exponent[r] = e;
    e *= base;
  }
  VarWeightedCnf vw{hard_cnf, std::vector<BigInt>(hard_cnf.num_vars, 0)};
  for (const auto& [v, r] : class_rank) vw.var_weight[v - 1] = exponent[r];
  return solve_mult(vw);
}

}  // namespace twred
