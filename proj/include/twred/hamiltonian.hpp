#pragma once

#include "twred/cnf.hpp"
#include "twred/weight.hpp"

#include <map>
#include <utility>

namespace twred {

/// H(x) = sum_i w_i x_i + sum_{i<j} w_ij x_i x_j over x in {0,1}^n.
/// Zero coefficients are never stored.
class Hamiltonian {
 public:
  using Pair = std::pair<Var, Var>;

  Hamiltonian() = default;
  explicit Hamiltonian(int n) : n_(n) {}

  int num_vars() const { return n_; }
  void set_num_vars(int n);

  /// Adds `w` to the coefficient of x_i (i == j) or x_i x_j. Order of i, j is free.
  void add(Var i, Var j, const BigInt& w);
  void add_linear(Var i, const BigInt& w) { add(i, i, w); }

  BigInt linear(Var i) const;
  BigInt quadratic(Var i, Var j) const;

  const std::map<Var, BigInt>& linear_terms() const { return linear_; }
  const std::map<Pair, BigInt>& quadratic_terms() const { return quadratic_; }
  std::size_t num_terms() const { return linear_.size() + quadratic_.size(); }

  friend bool operator==(const Hamiltonian&, const Hamiltonian&) = default;

 private:
  int n_ = 0;
  std::map<Var, BigInt> linear_;
  std::map<Pair, BigInt> quadratic_;
};

/// Exact value of H at the 0/1 point x. Throws DomainError if x.size() != n.
BigInt evaluate(const Hamiltonian& h, const Assignment& x);

}  // namespace twred
