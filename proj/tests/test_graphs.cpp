#include "oracle.hpp"

#include "twred/graph.hpp"

#include <doctest.h>

using namespace twred;

namespace {

WeightedCnf small() {
  WeightedCnf phi;
  phi.num_vars = 4;
  phi.add({Literal::pos(1), Literal::neg(2), Literal::pos(3)}, 2);
  phi.add({Literal::neg(3), Literal::pos(4)}, Weight::infinity());
  phi.add({Literal::pos(2)}, 1);
  return phi;
}

}  // namespace

TEST_CASE("primal graph is the union of clause cliques") {
  Graph g = primal_graph(small());
  CHECK(g.num_vertices() == 4);
  CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

TEST_CASE("incidence graph numbers clauses after variables") {
  WeightedCnf phi = small();
  Graph g = incidence_graph(phi);
  CHECK(g.num_vertices() == 7);
  CHECK(clause_vertex(4, 0) == 5);
  CHECK(g.neighbors(5) == std::vector<Vertex>{1, 2, 3});
  CHECK(g.neighbors(6) == std::vector<Vertex>{3, 4});
  CHECK(g.neighbors(7) == std::vector<Vertex>{2});
  CHECK(g.kind(6) == VertexKind::kClause);
  CHECK(g.kind(2) == VertexKind::kVariable);
  CHECK(is_bipartite(g));
  CHECK_FALSE(is_bipartite(primal_graph(phi)));
}

TEST_CASE("graph ignores loops and repeated edges") {
  Graph g(3);
  g.add_edge(1, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 1);
  CHECK(g.num_edges() == 1);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 3));
}

TEST_CASE("hamiltonian graphs") {
  Hamiltonian h(4);
  h.add(1, 2, 3);
  h.add(3, 4, -1);
  h.add_linear(2, 5);
  Graph p = primal_graph(h);
  CHECK(p.edges() == std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {3, 4}});
  auto order = term_order(h);
  REQUIRE(order.size() == 3);
  CHECK(order[0] == Hamiltonian::Pair{2, 2});
  CHECK(order[1] == Hamiltonian::Pair{1, 2});
  Graph inc = incidence_graph(h);
  CHECK(inc.num_vertices() == 7);
  CHECK(inc.neighbors(5) == std::vector<Vertex>{2});
  CHECK(inc.neighbors(6) == std::vector<Vertex>{1, 2});
  CHECK(inc.neighbors(7) == std::vector<Vertex>{3, 4});
}

TEST_CASE("random formulas give bipartite incidence graphs with matching degrees") {
  std::mt19937 rng(3);
  for (int round = 0; round < 20; ++round) {
    WeightedCnf phi = oracle::random_wcnf(rng, {});
    Graph g = incidence_graph(phi);
    CHECK(is_bipartite(g));
    for (std::size_t k = 0; k < phi.clauses.size(); ++k)
      CHECK(g.degree(clause_vertex(phi.num_vars, k)) ==
            static_cast<int>(phi.clauses[k].literals.size()));
  }
}
