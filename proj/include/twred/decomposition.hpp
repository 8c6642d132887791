#pragma once

#include "twred/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twred {

using NodeId = int;
using Bag = std::vector<Vertex>;  // sorted, no duplicates

/// Rooted tree decomposition. Nodes are 0..size()-1.
class TreeDecomposition {
 public:
  TreeDecomposition() = default;

  /// Adds a node below `parent` (or a new root when parent is nullopt and
  /// the decomposition is empty). Returns the node id.
  NodeId add_node(Bag bag, std::optional<NodeId> parent = std::nullopt);
  /// Re-roots nothing; just replaces the root pointer of a forest under construction.
  void set_root(NodeId r) { root_ = r; }
  void set_parent(NodeId child, NodeId parent);

  int size() const { return static_cast<int>(bags_.size()); }
  bool empty() const { return bags_.empty(); }
  NodeId root() const { return root_; }
  const Bag& bag(NodeId t) const { return bags_[t]; }
  Bag& bag(NodeId t) { return bags_[t]; }
  const std::vector<NodeId>& children(NodeId t) const { return children_[t]; }
  std::optional<NodeId> parent(NodeId t) const;

  /// Nodes in preorder from the root (children in stored order).
  std::vector<NodeId> preorder() const;
  /// Largest vertex id mentioned in any bag.
  Vertex max_vertex() const;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;

 private:
  std::vector<Bag> bags_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<int> parent_;  // -1 for none
  NodeId root_ = 0;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks tree shape, vertex range, connectedness and edge covering.
ValidationReport validate(const Graph& g, const TreeDecomposition& td);

/// Throws PreconditionError carrying the first violations if `td` is not a
/// decomposition of `g`.
void require_valid(const Graph& g, const TreeDecomposition& td, const std::string& what);

/// max |bag| - 1. Throws PreconditionError on an empty decomposition.
int width(const TreeDecomposition& td);

enum class Heuristic { kMinFill, kMinDegree };

/// Elimination-ordering decomposition. Ties go to the smallest vertex id when
/// seed == 0; other seeds break ties pseudo-randomly but reproducibly.
TreeDecomposition heuristic_td(const Graph& g, Heuristic strategy = Heuristic::kMinFill,
                               unsigned seed = 0);

/// Decomposition induced by an elimination order (all vertices, each once).
/// Node i holds order[i] and its later neighbors in the fill-in graph; the
/// root is the node created last.
TreeDecomposition td_from_elimination_order(const Graph& g, const std::vector<Vertex>& order);

struct ExactTreewidth {
  int width;
  TreeDecomposition td;
};

/// Exact treewidth by branch and bound over elimination orders with
/// memoization on eliminated sets. Throws SizeError above `max_vertices`.
ExactTreewidth exact_treewidth(const Graph& g, int max_vertices = 20);

/// Every node is a leaf with at most one vertex, has one child and introduces
/// at most one vertex relative to it, or has two children with its own bag.
/// Width is preserved.
TreeDecomposition make_special_form(const TreeDecomposition& td);
bool is_special_form(const TreeDecomposition& td);

/// Topmost node whose bag contains v. Throws PreconditionError if absent.
NodeId root_of(const TreeDecomposition& td, Vertex v);

}  // namespace twred
