#include "twred/reduce.hpp"

#include "twred/error.hpp"
#include "witness.hpp"

namespace twred {

using detail::clause_sym;
using detail::ClauseIds;
using detail::TdEditor;
using detail::vars_of;

ReductionResult rule1_drop_zero(const WeightedCnf& phi, const Witness& w) {
  phi.check();
  detail::check_witness(phi, w);
  WeightedCnf out;
  out.num_vars = phi.num_vars;
  ClauseIds ids(phi.clauses.size());
  std::vector<std::size_t> dropped;
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    if (phi.clauses[j].weight.is_zero()) {
      dropped.push_back(j);
      continue;
    }
    ids.place(clause_sym(j), out.clauses.size());
    out.clauses.push_back(phi.clauses[j]);
  }
  ReductionResult r{out, ReductionTrace::identity(phi.num_vars), w.primal, std::nullopt};
  if (w.incidence) {
    auto ed = TdEditor::incidence(*w.incidence, phi.num_vars);
    for (std::size_t j : dropped) ed.remove(clause_sym(j));
    r.td_incidence = ed.release(ids.relabel(out.num_vars));
  }
  return r;
}

ReductionResult rule2_unit_soft(const WeightedCnf& phi, const Witness& w) {
  phi.check();
  detail::check_witness(phi, w);
  WeightedCnf out = phi;
  struct Step {
    std::size_t clause;
    Var aux;
    std::size_t unit;
  };
  std::vector<Step> steps;
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const Clause& c = phi.clauses[j];
    if (!c.is_soft() || c.size() <= 1) continue;
    if (c.weight.value() < 0) throw PreconditionError("clause " + std::to_string(j) + ": negative weight");
    Var a = out.fresh_var();
    out.clauses[j].literals.push_back(Literal::neg(a));
    out.clauses[j].weight = Weight::infinity();
    steps.push_back({j, a, out.clauses.size()});
    out.add({Literal::pos(a)}, c.weight);
  }
  ReductionResult r{out, detail::extend_trace(phi.num_vars, out.num_vars), std::nullopt, std::nullopt};
  for (const auto& s : steps) r.trace.fresh.push_back({s.aux, "rule2", static_cast<long>(s.clause)});
  if (w.primal) {
    TdEditor ed(*w.primal);
    for (const auto& s : steps) {
      auto vs = vars_of(phi.clauses[s.clause]);
      Bag bag = vs;
      bag.push_back(s.aux);
      ed.attach_to(vs, bag);
    }
    r.td_primal = ed.td();
  }
  if (w.incidence) {
    auto ed = TdEditor::incidence(*w.incidence, phi.num_vars);
    for (const auto& s : steps) {
      NodeId t = ed.attach_to({clause_sym(s.clause)}, {clause_sym(s.clause), s.aux});
      ed.attach(t, {s.aux, clause_sym(s.unit)});
    }
    r.td_incidence = ed.release_incidence(out.num_vars);
  }
  return r;
}

ReductionResult rule3_split3(const WeightedCnf& phi, const Witness& w) {
  phi.check();
  detail::check_witness(phi, w);
  WeightedCnf out = phi;
  struct Step {
    std::size_t clause;
    std::vector<Var> aux;
  };
  std::vector<Step> steps;
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const Clause& c = phi.clauses[j];
    const std::size_t q = c.size();
    if (!c.is_hard() || q <= 3) continue;
    const auto& l = c.literals;
    Step s{j, {}};
    for (std::size_t i = 0; i + 3 < q; ++i) s.aux.push_back(out.fresh_var());
    out.clauses[j].literals = {l[0], l[1], Literal::pos(s.aux[0])};
    for (std::size_t i = 1; i + 3 < q; ++i)
      out.add({Literal::neg(s.aux[i - 1]), l[i + 1], Literal::pos(s.aux[i])}, Weight::infinity());
    out.add({Literal::neg(s.aux.back()), l[q - 2], l[q - 1]}, Weight::infinity());
    steps.push_back(std::move(s));
  }
  ReductionResult r{out, detail::extend_trace(phi.num_vars, out.num_vars), std::nullopt, std::nullopt};
  for (const auto& s : steps)
    for (Var a : s.aux) r.trace.fresh.push_back({a, "rule3", static_cast<long>(s.clause)});
  if (w.incidence) r.trace.notes.push_back("rule3: incidence witness not carried over");
  if (w.primal) {
    TdEditor ed(*w.primal);
    for (const auto& s : steps) {
      const auto& l = phi.clauses[s.clause].literals;
      const std::size_t q = l.size();
      Bag first;
      for (const auto& lit : l) first.push_back(lit.var);
      std::vector<Vertex> anchor = first;
      first.push_back(s.aux[0]);
      NodeId t = ed.attach_to(anchor, first);
      // Node i keeps the literals not yet consumed plus the two auxiliaries it links.
      for (std::size_t i = 1; i + 3 < q; ++i) {
        Bag bag{s.aux[i - 1], s.aux[i]};
        for (std::size_t k = i + 1; k < q; ++k) bag.push_back(l[k].var);
        t = ed.attach(t, bag);
      }
    }
    r.td_primal = ed.td();
  }
  return r;
}

ReductionResult rule4_soften(const WeightedCnf& phi, const Witness& w) {
  phi.check();
  detail::check_witness(phi, w);
  WeightedCnf out = phi;
  BigInt h = 1;
  std::size_t hard = 0;
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const auto& c = phi.clauses[j];
    if (c.is_hard()) {
      ++hard;
    } else if (c.weight.value() < 0) {
      throw PreconditionError("clause " + std::to_string(j) + ": negative weight");
    } else {
      h += c.weight.value();
    }
  }
  for (auto& c : out.clauses)
    if (c.is_hard()) c.weight = h;
  ReductionResult r{out, ReductionTrace::identity(phi.num_vars), w.primal, w.incidence};
  r.trace.h = Weight(h);
  r.trace.theta = Weight(BigInt(hard) * h);
  r.trace.sat_threshold = Weight(h);
  return r;
}

ReductionResult rule5_to2(const WeightedCnf& phi, const BigInt& h, const Witness& w) {
  phi.check();
  detail::check_witness(phi, w);
  WeightedCnf out;
  out.num_vars = phi.num_vars;
  ClauseIds ids(phi.clauses.size());
  struct Step {
    std::size_t clause;
    Var aux;
    std::size_t first_out;
  };
  std::vector<Step> steps;
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const Clause& c = phi.clauses[j];
    if (c.size() > 3) throw PreconditionError("clause " + std::to_string(j) + " has more than three literals");
    if (c.size() < 3) {
      ids.place(clause_sym(j), out.clauses.size());
      out.clauses.push_back(c);
      continue;
    }
    if (c.weight != Weight(h))
      throw PreconditionError("ternary clause " + std::to_string(j) + " has weight " + c.weight.to_string() +
                              ", expected " + h.str());
    const Literal l1 = c.literals[0], l2 = c.literals[1], l3 = c.literals[2];
    const Var a = out.fresh_var();
    steps.push_back({j, a, out.clauses.size()});
    out.add({l1, l2}, h);
    out.add({l1, l3}, h);
    out.add({~l2, ~l3}, h);
    out.add({Literal::pos(a), ~l1}, h);
    out.add({Literal::neg(a), l2}, h);
    out.add({Literal::neg(a), l3}, h);
  }
  ReductionResult r{out, detail::extend_trace(phi.num_vars, out.num_vars), std::nullopt, std::nullopt};
  const BigInt apps = steps.size();
  r.trace.offset = apps * h;
  r.trace.h = Weight(h);
  r.trace.theta = Weight(4 * apps * h);
  for (const auto& s : steps) r.trace.fresh.push_back({s.aux, "rule5", static_cast<long>(s.clause)});
  if (w.primal) {
    TdEditor ed(*w.primal);
    for (const auto& s : steps) {
      auto vs = vars_of(phi.clauses[s.clause]);
      Bag bag = vs;
      bag.push_back(s.aux);
      ed.attach_to(vs, bag);
    }
    r.td_primal = ed.td();
  }
  if (w.incidence) {
    auto ed = TdEditor::incidence(*w.incidence, phi.num_vars);
    for (const auto& s : steps) {
      const auto& l = phi.clauses[s.clause].literals;
      // The clause vertex gives way to its second and third variable.
      ed.replace(clause_sym(s.clause), {l[1].var, l[2].var});
      NodeId g = ed.attach_to({l[0].var, l[1].var, l[2].var}, {l[0].var, l[1].var, l[2].var, s.aux});
      for (std::size_t k = 0; k < 6; ++k) {
        Vertex sym = ids.fresh();
        ids.place(sym, s.first_out + k);
        Bag bag = vars_of(out.clauses[s.first_out + k]);
        bag.push_back(sym);
        ed.attach(g, bag);
      }
    }
    r.td_incidence = ed.release(ids.relabel(out.num_vars));
  }
  return r;
}

}  // namespace twred
