#pragma once

#include "twred/cnf.hpp"
#include "twred/decomposition.hpp"
#include "twred/hamiltonian.hpp"
#include "twred/trace.hpp"

#include <optional>
#include <variant>

namespace twred {

/// Decompositions that certify the width of an instance. Either may be absent.
struct Witness {
  std::optional<TreeDecomposition> primal;
  std::optional<TreeDecomposition> incidence;
};

struct ReductionResult {
  std::variant<WeightedCnf, Hamiltonian> instance;
  ReductionTrace trace;
  std::optional<TreeDecomposition> td_primal;
  std::optional<TreeDecomposition> td_incidence;

  bool is_formula() const { return std::holds_alternative<WeightedCnf>(instance); }
  const WeightedCnf& formula() const { return std::get<WeightedCnf>(instance); }
  const Hamiltonian& hamiltonian() const { return std::get<Hamiltonian>(instance); }
  Witness witness() const { return {td_primal, td_incidence}; }
};

// Reduction rules. Every rule is the identity when it is not applicable.
// Witness decompositions passed in are validated against the input graphs
// and transformed into decompositions of the output graphs.

/// Deletes zero-weight clauses.
ReductionResult rule1_drop_zero(const WeightedCnf& phi, const Witness& w = {});
/// (l1 v ... v lq)^w, q > 1, w finite  ->  (a)^w and (l1 v ... v lq v -a)^inf.
ReductionResult rule2_unit_soft(const WeightedCnf& phi, const Witness& w = {});
/// Splits hard clauses longer than three with chained auxiliaries. Primal witness only.
ReductionResult rule3_split3(const WeightedCnf& phi, const Witness& w = {});
/// Replaces every hard weight by h = 1 + sum of soft weights.
ReductionResult rule4_soften(const WeightedCnf& phi, const Witness& w = {});
/// Replaces each ternary clause of weight h by the six-clause binary gadget.
ReductionResult rule5_to2(const WeightedCnf& phi, const BigInt& h, const Witness& w = {});
/// Removes positive literals from a binary all-soft formula (weights in [0, h]).
ReductionResult rule6_monotone(const WeightedCnf& phi, const BigInt& h, const Witness& w = {});
/// Monotone binary formula to Hamiltonian with H(x) = cost(x) pointwise.
ReductionResult rule7_to_qubo(const WeightedCnf& phi, const Witness& w = {});
/// Hamiltonian to WCNF whose optima project onto the ground states.
ReductionResult rule8_qubo_to_maxsat(const Hamiltonian& h, const Witness& w = {});

/// Decomposition-guided encoding into a ternary formula with equal cost.
/// `td_inc` must decompose incidence_graph(phi).
ReductionResult encode3_guided(const WeightedCnf& phi, const TreeDecomposition& td_inc);
/// encode3_guided followed by Rule 4 and Rule 5: a binary formula.
ReductionResult encode2_guided(const WeightedCnf& phi, const TreeDecomposition& td_inc);

struct PipelineOptions {
  /// Incidence decomposition of the input; selects the guided route.
  std::optional<TreeDecomposition> td_incidence;
  /// Primal decomposition of the input; a min-fill one is computed when absent.
  std::optional<TreeDecomposition> td_primal;
};

/// The stages a pipeline can stop at.
enum class Target { kTernary, kBinary, kMonotone, kQubo };

/// Rules 1-7 (or Rule 1, the guided encoding, Rules 6-7) up to `target`.
ReductionResult reduce_to(const WeightedCnf& phi, Target target, const PipelineOptions& opts = {});

inline ReductionResult pipeline_maxsat_to_qubo(const WeightedCnf& phi,
                                               const PipelineOptions& opts = {}) {
  return reduce_to(phi, Target::kQubo, opts);
}

/// Applies `next` to the output of `prev`, composing traces.
ReductionResult chain(const ReductionResult& prev, const ReductionResult& next);

}  // namespace twred
