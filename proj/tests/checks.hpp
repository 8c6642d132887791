#pragma once

// Shared assertions about reduction results, phrased as plain booleans with
// a message so both the unit tests and the acceptance binary can use them.

#include "oracle.hpp"

#include "twred/decomposition.hpp"
#include "twred/graph.hpp"
#include "twred/reduce.hpp"
#include "twred/solve.hpp"

#include <string>

namespace checks {

using twred::BigInt;

struct Outcome {
  bool ok = true;
  std::string why;
  void fail(const std::string& msg) {
    if (ok) why = msg;
    ok = false;
  }
};

// Optimal output value (nullopt for an infinite optimum) and optimal masks.
struct OutOpt {
  std::optional<BigInt> value;
  std::vector<std::uint64_t> optima;
  int n = 0;
};

inline OutOpt output_optimum(const twred::ReductionResult& r) {
  if (r.is_formula()) {
    auto o = oracle::optimum(r.formula());
    return {o.value, o.optima, r.formula().num_vars};
  }
  auto g = oracle::ground(r.hamiltonian());
  return {g.value, g.optima, r.hamiltonian().num_vars()};
}

// Optimum preservation: on satisfiable inputs the output optimum minus the
// offset equals the input optimum and every output optimum maps back to an
// input optimum. On unsatisfiable inputs the output must signal it.
inline Outcome optimum_preserved(const twred::WeightedCnf& in, const twred::ReductionResult& r) {
  Outcome res;
  auto ref = oracle::optimum(in);
  OutOpt out = output_optimum(r);
  if (!ref.value) {
    if (out.value && !r.trace.signals_unsat(twred::Weight(*out.value)))
      res.fail("unsatisfiable input not signalled, output optimum " + out.value->str());
    return res;
  }
  if (!out.value) {
    res.fail("output has no finite optimum");
    return res;
  }
  if (r.trace.signals_unsat(twred::Weight(*out.value))) res.fail("satisfiable input reported unsat");
  if (*out.value - r.trace.offset != *ref.value)
    res.fail("optimum " + out.value->str() + " - offset " + r.trace.offset.str() + " != " +
             ref.value->str());
  for (auto m : out.optima) {
    auto back = r.trace.map_back(oracle::assignment(m, out.n));
    auto c = oracle::cost(in, back.values());
    if (!c || *c != *ref.value) {
      res.fail("an output optimum maps back to a non-optimal assignment");
      break;
    }
  }
  return res;
}

inline twred::Graph out_graph(const twred::ReductionResult& r, bool incidence) {
  if (r.is_formula())
    return incidence ? twred::incidence_graph(r.formula()) : twred::primal_graph(r.formula());
  return incidence ? twred::incidence_graph(r.hamiltonian()) : twred::primal_graph(r.hamiltonian());
}

// Every witness carried by the result decomposes the matching output graph.
inline Outcome witnesses_valid(const twred::ReductionResult& r) {
  Outcome res;
  if (r.td_primal) {
    auto rep = twred::validate(out_graph(r, false), *r.td_primal);
    if (!rep.ok()) res.fail("primal witness: " + rep.violations.front());
  }
  if (r.td_incidence) {
    auto rep = twred::validate(out_graph(r, true), *r.td_incidence);
    if (!rep.ok()) res.fail("incidence witness: " + rep.violations.front());
  }
  return res;
}

// Enumeration is used on outputs up to this many variables; larger outputs
// are solved by the DP over the carried witness (checked against
// enumeration on their own).
inline constexpr int kEnumerateUpTo = 16;

// Output optimum (nullopt when infinite) and one optimal output assignment.
struct Solved {
  std::optional<BigInt> value;
  twred::Assignment witness;
};

inline Solved solve_output(const twred::ReductionResult& r) {
  const int n = r.is_formula() ? r.formula().num_vars : r.hamiltonian().num_vars();
  if (n <= kEnumerateUpTo) {
    auto o = output_optimum(r);
    if (!o.value) return {};
    return {o.value, oracle::assignment(o.optima.front(), o.n)};
  }
  twred::Optimum o;
  if (r.is_formula()) {
    const twred::WeightedCnf& f = r.formula();
    if (r.td_incidence) {
      o = twred::dp_maxsat_incidence(f, *r.td_incidence);
    } else {
      o = twred::dp_maxsat_primal(f, r.td_primal ? *r.td_primal
                                                 : twred::heuristic_td(twred::primal_graph(f)));
    }
  } else {
    const twred::Hamiltonian& h = r.hamiltonian();
    o = twred::dp_qubo_primal(h, r.td_primal ? *r.td_primal
                                              : twred::heuristic_td(twred::primal_graph(h)));
  }
  if (o.value.is_infinite()) return {};
  return {o.value.value(), o.witness};
}

// optimum(output) - offset == optimum(input) on satisfiable inputs, the
// unsat signal otherwise, and the back-mapped witness attains the optimum.
inline Outcome sound(const twred::WeightedCnf& in, const twred::ReductionResult& r,
                     const std::string& what) {
  Outcome res;
  if (r.is_formula() && r.formula().num_vars <= kEnumerateUpTo) {
    res = optimum_preserved(in, r);
    if (!res.ok) res.why = what + ": " + res.why;
    return res;
  }
  auto ref = oracle::optimum(in).value;
  Solved out = solve_output(r);
  if (!ref) {
    if (out.value && !r.trace.signals_unsat(twred::Weight(*out.value)))
      res.fail(what + ": unsatisfiable input not signalled");
    return res;
  }
  if (!out.value) {
    res.fail(what + ": output has no finite optimum");
    return res;
  }
  if (*out.value - r.trace.offset != *ref)
    res.fail(what + ": optimum " + out.value->str() + " - offset " + r.trace.offset.str() +
             " != " + ref->str());
  if (r.trace.signals_unsat(twred::Weight(*out.value)))
    res.fail(what + ": satisfiable input reported unsat");
  auto c = oracle::cost(in, r.trace.map_back(out.witness).values());
  if (!c || *c != *ref) res.fail(what + ": back-mapped witness is not optimal");
  return res;
}

}  // namespace checks
