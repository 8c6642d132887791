#pragma once

#include "twred/cnf.hpp"
#include "twred/decomposition.hpp"
#include "twred/hamiltonian.hpp"

#include <vector>

namespace twred {

/// Optimal value with one witness. For Hamiltonians the value is the
/// (finite) ground-state energy.
struct Optimum {
  Weight value;
  Assignment witness;
  /// Every optimal assignment, lexicographically sorted. Brute force only, on request.
  std::vector<Assignment> all_witnesses;
  /// Largest DP table touched (entries), 0 for brute force.
  std::size_t max_table_entries = 0;
};

struct BruteForceOptions {
  int max_vars = 20;
  bool all_witnesses = false;
};

/// Enumerates all 2^n assignments. The witness is the lexicographically
/// smallest optimum.
Optimum brute_force_maxsat(const WeightedCnf& phi, const BruteForceOptions& opts = {});
Optimum brute_force_qubo(const Hamiltonian& h, const BruteForceOptions& opts = {});

/// Dynamic programming over a decomposition of the primal graph. Each clause
/// is charged at the first preorder node whose bag covers it.
Optimum dp_maxsat_primal(const WeightedCnf& phi, const TreeDecomposition& td);
Optimum dp_qubo_primal(const Hamiltonian& h, const TreeDecomposition& td);

/// Dynamic programming over a decomposition of the incidence graph; clause
/// vertices carry a satisfied bit.
Optimum dp_maxsat_incidence(const WeightedCnf& phi, const TreeDecomposition& td_inc);

/// Binary formulas only: min-fill primal decomposition + primal DP.
Optimum solve_binary_via_primal(const WeightedCnf& phi);

}  // namespace twred
