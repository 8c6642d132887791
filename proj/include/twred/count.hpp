#pragma once

#include "twred/cnf.hpp"
#include "twred/decomposition.hpp"
#include "twred/solve.hpp"
#include "twred/trace.hpp"

#include <map>
#include <optional>
#include <vector>

namespace twred {

/// All-hard CNF with nonnegative variable weights. cost(b) is the weight of
/// the false variables, w(b) the weight of the true ones.
struct VarWeightedCnf {
  WeightedCnf cnf;
  std::vector<BigInt> var_weight;  // index v - 1

  const BigInt& weight(Var v) const { return var_weight[v - 1]; }
  BigInt total_weight() const;
  /// w(b) for an assignment of cnf.
  BigInt weight_of(const Assignment& beta) const;
  void check() const;
};

/// Exact number of satisfying assignments of an all-hard formula, by DP over
/// a primal decomposition. Throws PreconditionError if a soft clause is present.
BigInt dp_count(const WeightedCnf& psi, const TreeDecomposition& td);
/// dp_count with a min-fill decomposition.
BigInt model_count(const WeightedCnf& psi);

struct VarWeightedResult {
  VarWeightedCnf vw;
  ReductionTrace trace;
  BigInt total_soft_weight = 0;
};

/// Moves every soft clause weight onto a fresh variable a with the hard
/// clause (c v -a). max w(b) over models = total soft weight - cost(phi).
VarWeightedResult to_var_weighted(const WeightedCnf& phi);

struct VarWeightedStep {
  VarWeightedCnf vw;
  std::optional<TreeDecomposition> td_incidence;
};

/// Splits every weight w(x) > 1 into w(x) unit-weight variables w_i with
/// clauses (x v -w_i). Preserves max w(b).
VarWeightedStep elim_unary(const VarWeightedCnf& vw,
                           const std::optional<TreeDecomposition>& td_inc = std::nullopt);

struct CountEncoding {
  WeightedCnf cnf;  // all hard
  int multiplier_bits = 0;  // m: every model b contributes 2^(m * w(b))
  std::optional<TreeDecomposition> td_incidence;
};

/// For each weight-one variable x adds m auxiliaries w_i with (x v w_i), so
/// that #(output) = sum over models b of 2^(m * w(b)). m defaults to n + 1.
CountEncoding encode_weight_one(const VarWeightedCnf& vw, std::optional<int> m = std::nullopt,
                                const std::optional<TreeDecomposition>& td_inc = std::nullopt);

/// Largest w with floor(count / 2^(w*m)) > 0, or nullopt when count == 0.
std::optional<BigInt> max_weight_from_count(const BigInt& count, int m);

/// Clause-weighted MaxSAT with small (unary) weights via counting. Returns
/// the minimum cost and a witness built by self-reduction.
Optimum solve_unary(const WeightedCnf& phi);

struct MaxWeightOptimum {
  bool satisfiable = false;
  BigInt max_weight = 0;  // max sum of exponents over true variables
  Assignment witness;
};

/// Variables carry weight 2^e(x); maximizes the product of true-variable
/// weights, i.e. the sum of exponents, by binary search on the count.
MaxWeightOptimum solve_mult(const VarWeightedCnf& exponents);

/// Lexicographic MaxSAT over priority classes (higher rank = more important):
/// maximize the number of true variables of the top class, then the next.
/// Variables without a class are unweighted.
MaxWeightOptimum solve_lex(const WeightedCnf& hard_cnf, const std::map<Var, int>& class_rank);

}  // namespace twred
