#include "twred/graph.hpp"

#include "twred/error.hpp"

#include <algorithm>
#include <queue>

namespace twred {

Graph::Graph(int n, VertexKind kind) {
  adj_.resize(n + 1);
  kind_.assign(n + 1, kind);
}

Vertex Graph::add_vertex(VertexKind kind) {
  adj_.emplace_back();
  kind_.push_back(kind);
  return num_vertices();
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 1 || v < 1 || u > num_vertices() || v > num_vertices())
    throw PreconditionError("edge endpoint out of range");
  if (u == v) return;
  auto insert = [](std::vector<Vertex>& list, Vertex x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj_[u], v);
  insert(adj_[v], u);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 1 || u > num_vertices()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::num_edges() const {
  std::size_t s = 0;
  for (const auto& a : adj_) s += a.size();
  return s / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 1; u <= num_vertices(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph primal_graph(const WeightedCnf& phi) {
  Graph g(phi.num_vars);
  for (const auto& c : phi.clauses)
    for (std::size_t a = 0; a < c.literals.size(); ++a)
      for (std::size_t b = a + 1; b < c.literals.size(); ++b) g.add_edge(c.literals[a].var, c.literals[b].var);
  return g;
}

Graph incidence_graph(const WeightedCnf& phi) {
  Graph g(phi.num_vars);
  for (const auto& c : phi.clauses) {
    Vertex cv = g.add_vertex(VertexKind::kClause);
    for (const auto& l : c.literals) g.add_edge(cv, l.var);
  }
  return g;
}

std::vector<Hamiltonian::Pair> term_order(const Hamiltonian& h) {
  std::vector<Hamiltonian::Pair> out;
  for (const auto& [i, w] : h.linear_terms()) out.emplace_back(i, i);
  for (const auto& [ij, w] : h.quadratic_terms()) out.push_back(ij);
  return out;
}

Graph primal_graph(const Hamiltonian& h) {
  Graph g(h.num_vars());
  for (const auto& [ij, w] : h.quadratic_terms()) g.add_edge(ij.first, ij.second);
  return g;
}

Graph incidence_graph(const Hamiltonian& h) {
  Graph g(h.num_vars());
  for (const auto& [i, j] : term_order(h)) {
    Vertex t = g.add_vertex(VertexKind::kTerm);
    g.add_edge(t, i);
    g.add_edge(t, j);
  }
  return g;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.num_vertices() + 1, -1);
  for (Vertex s = 1; s <= g.num_vertices(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace twred
