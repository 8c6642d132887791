#include "oracle.hpp"

#include "twred/decomposition.hpp"
#include "twred/error.hpp"
#include "twred/io.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace twred;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::uniform_real_distribution<double> u(0, 1);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (u(rng) < p) g.add_edge(a, b);
  return g;
}

// Treewidth as the minimum over all elimination orders of the largest
// neighbourhood met while eliminating.
int treewidth_by_permutations(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  int best = n;
  do {
    std::vector<std::set<int>> adj(n + 1);
    for (auto [a, b] : g.edges()) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
    int w = 0;
    for (int v : order) {
      w = std::max(w, static_cast<int>(adj[v].size()));
      for (int a : adj[v])
        for (int b : adj[v])
          if (a != b) adj[a].insert(b);
      for (int a : adj[v]) adj[a].erase(v);
      adj[v].clear();
    }
    best = std::min(best, w);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

Graph centaurus() {
  return primal_graph(parse_qubo(read_file(TWRED_TEST_DATA "/centaurus.qubo")).h);
}

}  // namespace

TEST_CASE("validate reports each kind of violation") {
  Graph g(3);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  TreeDecomposition ok;
  NodeId r = ok.add_node({1, 2});
  ok.add_node({2, 3}, r);
  CHECK(validate(g, ok).ok());
  CHECK(width(ok) == 1);

  TreeDecomposition missing_edge;
  r = missing_edge.add_node({1, 2});
  missing_edge.add_node({3}, r);
  CHECK_FALSE(validate(g, missing_edge).ok());

  TreeDecomposition disconnected;
  r = disconnected.add_node({1, 2});
  NodeId m = disconnected.add_node({2, 3}, r);
  disconnected.add_node({1}, m);
  CHECK_FALSE(validate(g, disconnected).ok());

  TreeDecomposition out_of_range;
  out_of_range.add_node({1, 2, 3, 4});
  CHECK_FALSE(validate(g, out_of_range).ok());
  CHECK_THROWS_AS(require_valid(g, out_of_range, "test"), PreconditionError);
}

TEST_CASE("heuristic decompositions are valid and seeds are reproducible") {
  std::mt19937 rng(7);
  for (int round = 0; round < 30; ++round) {
    Graph g = random_graph(rng, 12, 0.3);
    for (auto s : {Heuristic::kMinFill, Heuristic::kMinDegree}) {
      TreeDecomposition td = heuristic_td(g, s);
      CHECK(validate(g, td).ok());
      CHECK(heuristic_td(g, s, 9) == heuristic_td(g, s, 9));
      CHECK(validate(g, heuristic_td(g, s, 9)).ok());
    }
  }
}

TEST_CASE("elimination order decomposition") {
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 1);
  TreeDecomposition td = td_from_elimination_order(g, {1, 2, 3, 4});
  CHECK(validate(g, td).ok());
  CHECK(width(td) == 2);
}

TEST_CASE("exact treewidth matches the permutation oracle") {
  std::mt19937 rng(21);
  for (int round = 0; round < 25; ++round) {
    Graph g = random_graph(rng, 7, 0.45);
    ExactTreewidth e = exact_treewidth(g);
    CHECK(validate(g, e.td).ok());
    CHECK(width(e.td) == e.width);
    CHECK(e.width == treewidth_by_permutations(g));
  }
}

TEST_CASE("exact treewidth size guard") {
  CHECK_THROWS_AS(exact_treewidth(Graph(30), 20), SizeError);
}

TEST_CASE("centaurus graph has treewidth two") {
  Graph g = centaurus();
  ParsedTd p = parse_td(read_file(TWRED_TEST_DATA "/centaurus.td"));
  CHECK(validate(g, p.td).ok());
  CHECK(width(p.td) == 2);
  CHECK(exact_treewidth(g).width == 2);
  CHECK(width(heuristic_td(g)) == 2);
}

TEST_CASE("special form keeps width and validity") {
  std::mt19937 rng(4);
  for (int round = 0; round < 30; ++round) {
    Graph g = random_graph(rng, 10, 0.3);
    TreeDecomposition td = heuristic_td(g);
    TreeDecomposition sf = make_special_form(td);
    CHECK(is_special_form(sf));
    CHECK(validate(g, sf).ok());
    CHECK(width(sf) == width(td));
    for (NodeId t = 0; t < sf.size(); ++t) {
      const auto& ch = sf.children(t);
      if (ch.empty()) {
        CHECK(sf.bag(t).size() <= 1);
      } else if (ch.size() == 1) {
        std::vector<Vertex> extra;
        std::set_difference(sf.bag(t).begin(), sf.bag(t).end(), sf.bag(ch[0]).begin(),
                            sf.bag(ch[0]).end(), std::back_inserter(extra));
        CHECK(extra.size() <= 1);
      } else {
        REQUIRE(ch.size() == 2);
        CHECK(sf.bag(ch[0]) == sf.bag(t));
        CHECK(sf.bag(ch[1]) == sf.bag(t));
      }
    }
  }
}

TEST_CASE("root_of finds the topmost bag") {
  Graph g = centaurus();
  TreeDecomposition td = parse_td(read_file(TWRED_TEST_DATA "/centaurus.td")).td;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    NodeId t = root_of(td, v);
    CHECK(std::binary_search(td.bag(t).begin(), td.bag(t).end(), v));
    auto p = td.parent(t);
    if (p) CHECK_FALSE(std::binary_search(td.bag(*p).begin(), td.bag(*p).end(), v));
  }
  CHECK_THROWS_AS(root_of(td, 99), PreconditionError);
}
