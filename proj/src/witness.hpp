#pragma once

#include "twred/cnf.hpp"
#include "twred/decomposition.hpp"
#include "twred/reduce.hpp"

#include <functional>
#include <unordered_map>
#include <vector>

namespace twred::detail {

/// Mutable tree decomposition with a vertex -> nodes index. Vertex ids are
/// arbitrary nonzero ints here; rules use negative ids for clause vertices
/// until the final numbering is known.
class TdEditor {
 public:
  explicit TdEditor(const TreeDecomposition& td);
  /// Starts from an incidence decomposition: clause vertex n+1+k becomes -(k+1).
  static TdEditor incidence(const TreeDecomposition& td, int num_vars);

  /// Some node whose bag contains every vertex of `s` (the root for empty s).
  NodeId find(const std::vector<Vertex>& s) const;
  NodeId attach(NodeId at, Bag bag);
  NodeId attach_to(const std::vector<Vertex>& anchor, Bag bag) { return attach(find(anchor), std::move(bag)); }
  void replace(Vertex v, const std::vector<Vertex>& with);
  void remove(Vertex v) { replace(v, {}); }
  bool contains(NodeId t, Vertex v) const;
  const TreeDecomposition& td() const { return td_; }

  TreeDecomposition release(const std::function<Vertex(Vertex)>& relabel) const;
  /// Inverse of incidence(): -(k+1) becomes num_vars+1+k.
  TreeDecomposition release_incidence(int num_vars) const;

 private:
  void index(NodeId t, Vertex v) { occ_[v].push_back(t); }

  TreeDecomposition td_;
  std::unordered_map<Vertex, std::vector<NodeId>> occ_;
};

inline Vertex clause_sym(std::size_t k) { return -static_cast<Vertex>(k) - 1; }

std::vector<Vertex> vars_of(const Clause& c);

/// Symbolic ids for clause vertices created by a rule, numbered after the
/// input clauses, plus the final position of every clause symbol.
class ClauseIds {
 public:
  explicit ClauseIds(std::size_t input_clauses) : base_(input_clauses) {}
  Vertex fresh() { return clause_sym(base_ + created_++); }
  void place(Vertex sym, std::size_t index) { final_[sym] = index; }
  /// Release function for TdEditor: clause symbols go to num_vars + 1 + index.
  std::function<Vertex(Vertex)> relabel(int num_vars) const;

 private:
  std::size_t base_;
  std::size_t created_ = 0;
  std::unordered_map<Vertex, std::size_t> final_;
};

/// Validates the witness decompositions of a formula input.
void check_witness(const WeightedCnf& phi, const Witness& w);
/// Trace of a rule that keeps variables 1..n_in and appends fresh ones.
ReductionTrace extend_trace(int n_in, int n_out);

}  // namespace twred::detail
