#include "twred/reduce.hpp"

#include "twred/error.hpp"
#include "witness.hpp"

#include <functional>
#include <map>

namespace twred {

using detail::clause_sym;
using detail::ClauseIds;
using detail::TdEditor;
using detail::vars_of;

ReductionResult rule6_monotone(const WeightedCnf& phi, const BigInt& h, const Witness& w) {
  phi.check();
  detail::check_witness(phi, w);
  if (!phi.is_binary()) throw PreconditionError("rule6 needs a formula with at most two literals per clause");
  if (phi.has_hard()) throw PreconditionError("rule6 needs an all-soft formula");
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const auto& c = phi.clauses[j];
    bool positive = false;
    for (const auto& l : c.literals) positive |= !l.negative;
    if (positive && (c.weight.value() < 0 || c.weight.value() > h))
      throw PreconditionError("clause " + std::to_string(j) + ": weight " + c.weight.to_string() +
                              " outside [0, " + h.str() + "]");
  }

  WeightedCnf out;
  out.num_vars = phi.num_vars;
  ReductionTrace trace = ReductionTrace::identity(phi.num_vars);
  ClauseIds ids(phi.clauses.size());
  std::optional<TdEditor> prim, inc;
  if (w.primal) prim.emplace(*w.primal);
  if (w.incidence) inc.emplace(TdEditor::incidence(*w.incidence, phi.num_vars));

  auto emit = [&](Clause c, Vertex sym) {
    ids.place(sym, out.clauses.size());
    out.clauses.push_back(std::move(c));
  };
  std::function<void(const Clause&, Vertex, long)> process = [&](const Clause& c, Vertex sym, long origin) {
    std::size_t xi = c.size();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c.literals[i].negative) {
        xi = i;
        break;
      }
    if (xi == c.size()) {
      emit(c, sym);
      return;
    }
    const Var x = c.literals[xi].var;
    std::optional<Literal> other;
    if (c.size() == 2) other = c.literals[1 - xi];
    const Var a = out.fresh_var();
    trace.fresh.push_back({a, "rule6", origin});
    trace.offset -= h;

    Clause g1{{Literal::neg(a)}, c.weight};
    if (other) g1.literals.push_back(*other);
    const Clause g2{{Literal::neg(a), Literal::neg(x)}, Weight(2 * h)};
    const Clause g3{{Literal::neg(a)}, Weight(BigInt(-h))};
    const Clause g4{{Literal::neg(x)}, Weight(BigInt(-h))};

    std::vector<Vertex> xs{x};
    if (other) xs.push_back(other->var);
    if (prim) {
      Bag bag = xs;
      bag.push_back(a);
      prim->attach_to(xs, bag);
    }
    Vertex s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    if (inc) {
      inc->replace(sym, {a});
      s1 = ids.fresh(), s2 = ids.fresh(), s3 = ids.fresh(), s4 = ids.fresh();
      for (auto [g, s] : std::initializer_list<std::pair<const Clause*, Vertex>>{{&g1, s1}, {&g2, s2}, {&g3, s3}, {&g4, s4}}) {
        auto vs = vars_of(*g);
        Bag bag = vs;
        bag.push_back(s);
        inc->attach_to(vs, bag);
      }
    }
    process(g1, s1, origin);
    emit(g2, s2);
    emit(g3, s3);
    emit(g4, s4);
  };
  for (std::size_t j = 0; j < phi.clauses.size(); ++j)
    process(phi.clauses[j], clause_sym(j), static_cast<long>(j));

  trace.output_vars = out.num_vars;
  trace.h = Weight(h);
  ReductionResult r{out, trace, std::nullopt, std::nullopt};
  if (prim) r.td_primal = prim->td();
  if (inc) r.td_incidence = inc->release(ids.relabel(out.num_vars));
  return r;
}

ReductionResult rule7_to_qubo(const WeightedCnf& phi, const Witness& w) {
  phi.check();
  detail::check_witness(phi, w);
  if (!phi.is_monotone() || !phi.is_binary() || phi.has_hard())
    throw PreconditionError("rule7 needs a monotone, binary, all-soft formula");
  Hamiltonian H(phi.num_vars);
  BigInt constant = 0;
  std::vector<std::optional<Hamiltonian::Pair>> term(phi.clauses.size());
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const auto& c = phi.clauses[j];
    const BigInt& wt = c.weight.value();
    if (c.size() == 0) {
      constant += wt;
      continue;
    }
    Var x = c.literals[0].var;
    Var y = c.size() == 2 ? c.literals[1].var : x;
    term[j] = Hamiltonian::Pair{std::min(x, y), std::max(x, y)};
    H.add(x, y, wt);
  }
  ReductionResult r{H, ReductionTrace::identity(phi.num_vars), w.primal, std::nullopt};
  r.trace.offset = -constant;
  if (constant != 0) r.trace.notes.push_back("rule7: empty clauses folded into the offset");
  if (w.incidence) {
    auto order = term_order(H);
    std::map<Hamiltonian::Pair, std::size_t> index;
    for (std::size_t k = 0; k < order.size(); ++k) index[order[k]] = k;
    ClauseIds ids(phi.clauses.size());
    auto ed = TdEditor::incidence(*w.incidence, phi.num_vars);
    for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
      auto it = term[j] ? index.find(*term[j]) : index.end();
      if (it == index.end()) {
        ed.remove(clause_sym(j));
        continue;
      }
      ids.place(clause_sym(j), it->second);
      index.erase(it);  // later clauses on the same term are dropped
    }
    r.td_incidence = ed.release(ids.relabel(H.num_vars()));
  }
  return r;
}

ReductionResult rule8_qubo_to_maxsat(const Hamiltonian& H, const Witness& w) {
  if (w.primal) require_valid(primal_graph(H), *w.primal, "primal witness");
  if (w.incidence) require_valid(incidence_graph(H), *w.incidence, "incidence witness");
  const int n = H.num_vars();
  WeightedCnf out;
  out.num_vars = n;
  ReductionTrace trace = ReductionTrace::identity(n);
  const auto order = term_order(H);
  ClauseIds ids(order.size());
  std::optional<TdEditor> prim, inc;
  if (w.primal) prim.emplace(*w.primal);
  if (w.incidence) inc.emplace(TdEditor::incidence(*w.incidence, n));

  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto [i, j] = order[k];
    const BigInt wt = i == j ? H.linear(i) : H.quadratic(i, j);
    const BigInt mag = abs(wt);
    if (wt < 0) trace.offset += mag;
    if (i == j) {
      ids.place(clause_sym(k), out.clauses.size());
      out.add({wt > 0 ? Literal::neg(i) : Literal::pos(i)}, mag);
      continue;
    }
    if (wt > 0) {
      ids.place(clause_sym(k), out.clauses.size());
      out.add({Literal::neg(i), Literal::neg(j)}, mag);
      continue;
    }
    const Var a = out.fresh_var();
    trace.fresh.push_back({a, "rule8", static_cast<long>(k)});
    const std::size_t first = out.clauses.size();
    out.add({Literal::pos(a)}, mag);
    out.add({Literal::neg(a), Literal::pos(i)}, Weight::infinity());
    out.add({Literal::neg(a), Literal::pos(j)}, Weight::infinity());
    if (prim) prim->attach_to({i, j}, {i, j, a});
    if (inc) {
      inc->replace(clause_sym(k), {a});
      for (std::size_t c = first; c < first + 3; ++c) {
        Vertex sym = ids.fresh();
        ids.place(sym, c);
        auto vs = vars_of(out.clauses[c]);
        Bag bag = vs;
        bag.push_back(sym);
        inc->attach_to(vs, bag);
      }
    }
  }
  trace.output_vars = out.num_vars;
  ReductionResult r{out, trace, std::nullopt, std::nullopt};
  if (prim) r.td_primal = prim->td();
  if (inc) r.td_incidence = inc->release(ids.relabel(out.num_vars));
  return r;
}

}  // namespace twred
