#pragma once

#include "twred/cnf.hpp"
#include "twred/hamiltonian.hpp"

#include <utility>
#include <vector>

namespace twred {

using Vertex = int;

enum class VertexKind { kVariable, kClause, kTerm };

/// Simple undirected graph on vertices 1..n. Variable vertices reuse the
/// variable id; clause / term vertices follow at num_vars + 1 + index.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, VertexKind kind = VertexKind::kVariable);

  int num_vertices() const { return static_cast<int>(adj_.size()) - 1; }
  Vertex add_vertex(VertexKind kind);
  /// Ignores self loops and repeated edges.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  VertexKind kind(Vertex v) const { return kind_[v]; }
  std::size_t num_edges() const;
  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_{1};  // index 0 unused, lists sorted
  std::vector<VertexKind> kind_{VertexKind::kVariable};
};

/// Vertex per variable, clique per clause.
Graph primal_graph(const WeightedCnf& phi);
/// Bipartite: variables 1..n, clause k (0-based) is vertex n + 1 + k.
Graph incidence_graph(const WeightedCnf& phi);

/// Term order used by the incidence graph of a Hamiltonian: linear terms by i,
/// then quadratic terms by (i, j).
std::vector<Hamiltonian::Pair> term_order(const Hamiltonian& h);
Graph primal_graph(const Hamiltonian& h);
Graph incidence_graph(const Hamiltonian& h);

inline Vertex clause_vertex(int num_vars, std::size_t clause_index) {
  return num_vars + 1 + static_cast<int>(clause_index);
}

bool is_bipartite(const Graph& g);

}  // namespace twred
