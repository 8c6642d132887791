#pragma once

#include "twred/cnf.hpp"
#include "twred/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twred {

/// Where an auxiliary variable came from.
struct FreshVar {
  Var var = 0;
  std::string rule;
  long origin = -1;  // clause or term index in the rule's input, -1 if none

  friend bool operator==(const FreshVar&, const FreshVar&) = default;
};

/// Cost bookkeeping of a reduction. On optima of a satisfiable input,
/// cost(output) = cost(input) + offset. When sat_threshold is present, an
/// output optimum with cost - offset >= sat_threshold means the input has
/// no finite-cost assignment.
struct ReductionTrace {
  int input_vars = 0;
  int output_vars = 0;
  BigInt offset = 0;
  std::optional<Weight> h;
  std::optional<Weight> theta;
  std::optional<Weight> sat_threshold;
  /// back_map[i - 1] is the output variable that carries input variable i
  /// (0: not represented, read as false).
  std::vector<Var> back_map;
  std::vector<FreshVar> fresh;
  std::vector<std::string> notes;

  static ReductionTrace identity(int num_vars);

  /// Projects an output assignment onto the input variables.
  Assignment map_back(const Assignment& out) const;

  /// True when `output_cost` (an optimum of the output) certifies that the
  /// input is unsatisfiable.
  bool signals_unsat(const Weight& output_cost) const;

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Trace of `second` applied to the output of `first`. Offsets and thetas
/// add; h and the threshold come from the latest step that defines them.
ReductionTrace compose(const ReductionTrace& first, const ReductionTrace& second);

}  // namespace twred
