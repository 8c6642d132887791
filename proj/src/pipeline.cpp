#include "twred/reduce.hpp"

#include "twred/error.hpp"

namespace twred {

ReductionResult chain(const ReductionResult& prev, const ReductionResult& next) {
  ReductionResult r = next;
  r.trace = compose(prev.trace, next.trace);
  return r;
}

namespace {

ReductionResult finish_binary(ReductionResult r, Target target) {
  if (target == Target::kBinary) return r;
  const BigInt h = r.trace.h ? r.trace.h->value() : BigInt(1);
  r = chain(r, rule6_monotone(r.formula(), h, r.witness()));
  if (target == Target::kMonotone) return r;
  return chain(r, rule7_to_qubo(r.formula(), r.witness()));
}

}  // namespace

ReductionResult reduce_to(const WeightedCnf& phi, Target target, const PipelineOptions& opts) {
  phi.check();
  if (opts.td_incidence) {
    ReductionResult r = rule1_drop_zero(phi, {std::nullopt, opts.td_incidence});
    const WeightedCnf& f = r.formula();
    if (target == Target::kTernary) return chain(r, encode3_guided(f, *r.td_incidence));
    r = chain(r, encode2_guided(f, *r.td_incidence));
    return finish_binary(std::move(r), target);
  }
  TreeDecomposition primal = opts.td_primal ? *opts.td_primal : heuristic_td(primal_graph(phi));
  ReductionResult r = rule1_drop_zero(phi, {primal, std::nullopt});
  r = chain(r, rule2_unit_soft(r.formula(), r.witness()));
  r = chain(r, rule3_split3(r.formula(), r.witness()));
  if (target == Target::kTernary) return r;
  r = chain(r, rule4_soften(r.formula(), r.witness()));
  r = chain(r, rule5_to2(r.formula(), r.trace.h->value(), r.witness()));
  return finish_binary(std::move(r), target);
}

}  // namespace twred
