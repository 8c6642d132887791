#pragma once

#include "twred/weight.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace twred {

using Var = int;

/// A variable or its negation. Variables are numbered from 1.
struct Literal {
  Var var = 0;
  bool negative = false;

  static Literal pos(Var v) { return {v, false}; }
  static Literal neg(Var v) { return {v, true}; }
  /// DIMACS convention: -3 is the negation of x3.
  static Literal from_dimacs(long long lit);

  int to_dimacs() const { return negative ? -var : var; }
  Literal operator~() const { return {var, !negative}; }
  bool satisfied_by(bool value) const { return value != negative; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct Clause {
  std::vector<Literal> literals;
  Weight weight;

  bool is_hard() const { return weight.is_infinite(); }
  bool is_soft() const { return weight.is_finite(); }
  std::size_t size() const { return literals.size(); }

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Total assignment over variables 1..n.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_vars, bool value = false) : values_(num_vars, value) {}
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  bool operator[](Var v) const { return values_[v - 1]; }
  void set(Var v, bool value) { values_[v - 1] = value; }
  bool satisfies(const Literal& l) const { return l.satisfied_by((*this)[l.var]); }

  /// Lexicographic comparison with x1 most significant and false < true.
  friend bool operator<(const Assignment& a, const Assignment& b) { return a.values_ < b.values_; }
  friend bool operator==(const Assignment&, const Assignment&) = default;

  /// Builds the assignment whose x_i is bit (n - i) of `mask` (x1 is the highest bit).
  static Assignment from_mask(int num_vars, std::uint64_t mask);

  const std::vector<bool>& values() const { return values_; }

 private:
  std::vector<bool> values_;
};

/// Weighted CNF. Clause order is significant (clause vertex ids in the
/// incidence graph follow it); duplicates are allowed.
struct WeightedCnf {
  int num_vars = 0;
  std::vector<Clause> clauses;

  void add(std::vector<Literal> lits, Weight w) { clauses.push_back({std::move(lits), std::move(w)}); }
  /// Allocates a fresh variable id above all existing ones.
  Var fresh_var() { return ++num_vars; }

  bool is_monotone() const;
  bool is_binary() const { return max_clause_size() <= 2; }
  bool is_ternary() const { return max_clause_size() <= 3; }
  bool has_hard() const;
  bool all_hard() const;
  std::size_t max_clause_size() const;
  std::size_t total_literals() const;
  /// Sum of the finite weights.
  BigInt soft_weight_sum() const;

  /// Throws PreconditionError when a structural invariant is broken: variable
  /// out of range, negative weight in a non-monotone formula, duplicate or
  /// complementary literals inside a clause.
  void check() const;

  friend bool operator==(const WeightedCnf&, const WeightedCnf&) = default;
};

/// Sum of the weights of the clauses falsified by `beta`. Infinite iff some
/// hard clause is falsified. Throws DomainError if beta is not total.
Weight cost(const WeightedCnf& phi, const Assignment& beta);

bool satisfies(const Assignment& beta, const Clause& c);

struct NormalizeResult {
  WeightedCnf formula;
  std::vector<std::string> warnings;
};

/// Removes duplicate literals and drops tautological clauses (recording a
/// warning for each). Idempotent.
NormalizeResult normalize(const WeightedCnf& phi);

}  // namespace twred
