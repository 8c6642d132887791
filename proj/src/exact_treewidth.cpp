#include "twred/decomposition.hpp"

#include "twred/error.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace twred {

namespace {

using Mask = std::uint64_t;

class Search {
 public:
  explicit Search(const Graph& g) : n_(g.num_vertices()), adj_(n_, 0) {
    for (Vertex v = 1; v <= n_; ++v)
      for (Vertex u : g.neighbors(v)) adj_[v - 1] |= Mask{1} << (u - 1);
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  void run(int upper_bound) {
    ub_ = upper_bound;
    std::vector<int> order;
    go(0, -1, order);
  }

  int best() const { return ub_; }
  const std::vector<int>& best_order() const { return best_order_; }

 private:
  // Vertices outside S u {v} reachable from v through eliminated vertices:
  // the neighborhood of v after eliminating S.
  Mask q(Mask s, int v) const {
    Mask visited = Mask{1} << v, result = 0;
    Mask frontier = visited;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask fresh = adj_[x] & ~visited;
      visited |= fresh;
      result |= fresh & ~s;
      frontier |= fresh & s;
    }
    return result;
  }

  void go(Mask s, int cur, std::vector<int>& order) {
    const Mask rest = all_ & ~s;
    const int r = std::popcount(rest);
    if (std::max(cur, r - 1) < ub_ && r - 1 <= std::max(cur, 0)) {
      ub_ = std::max(cur, r - 1);
      best_order_ = order;
      for (Mask m = rest; m; m &= m - 1) best_order_.push_back(std::countr_zero(m));
      return;
    }
    if (r == 0) return;
    auto [it, inserted] = memo_.try_emplace(s, cur);
    if (!inserted) {
      if (it->second <= cur) return;
      it->second = cur;
    }

    std::vector<Mask> nb(n_, 0);
    int min_deg = n_;
    for (Mask m = rest; m; m &= m - 1) {
      int v = std::countr_zero(m);
      nb[v] = q(s, v);
      min_deg = std::min(min_deg, std::popcount(nb[v]));
    }
    if (std::max(cur, min_deg) >= ub_) return;

    // A simplicial vertex of small enough degree can always go first.
    for (Mask m = rest; m; m &= m - 1) {
      int v = std::countr_zero(m);
      bool clique = true;
      for (Mask k = nb[v]; k && clique; k &= k - 1) {
        int u = std::countr_zero(k);
        Mask others = nb[v] & ~(Mask{1} << u);
        clique = (others & ~nb[u]) == 0;
      }
      if (clique) {
        int deg = std::popcount(nb[v]);
        if (std::max(cur, deg) >= ub_) return;
        order.push_back(v);
        go(s | (Mask{1} << v), std::max(cur, deg), order);
        order.pop_back();
        return;
      }
    }

    for (Mask m = rest; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int next = std::max(cur, std::popcount(nb[v]));
      if (next >= ub_) continue;
      order.push_back(v);
      go(s | (Mask{1} << v), next, order);
      order.pop_back();
    }
  }

  int n_;
  std::vector<Mask> adj_;
  Mask all_ = 0;
  int ub_ = 0;
  std::vector<int> best_order_;
  std::unordered_map<Mask, int> memo_;
};

}  // namespace

ExactTreewidth exact_treewidth(const Graph& g, int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices || n > 64)
    throw SizeError("exact treewidth limited to " + std::to_string(std::min(max_vertices, 64)) +
                    " vertices, graph has " + std::to_string(n));
  TreeDecomposition heur = heuristic_td(g, Heuristic::kMinFill);
  const int ub = width(heur);
  if (n == 0) return {ub, heur};
  Search search(g);
  search.run(ub);
  if (search.best() >= ub) return {ub, heur};
  std::vector<Vertex> order;
  for (int v : search.best_order()) order.push_back(v + 1);
  TreeDecomposition td = td_from_elimination_order(g, order);
  if (width(td) != search.best()) throw InvariantError("exact treewidth: order does not realize its width");
  return {search.best(), std::move(td)};
}

}  // namespace twred
