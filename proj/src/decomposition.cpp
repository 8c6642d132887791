#include "twred/decomposition.hpp"

#include "twred/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

namespace twred {

NodeId TreeDecomposition::add_node(Bag bag, std::optional<NodeId> parent) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  const NodeId id = size();
  bags_.push_back(std::move(bag));
  children_.emplace_back();
  parent_.push_back(-1);
  if (id == 0) root_ = 0;
  if (parent) set_parent(id, *parent);
  return id;
}

void TreeDecomposition::set_parent(NodeId child, NodeId parent) {
  if (parent_[child] >= 0) {
    auto& sib = children_[parent_[child]];
    sib.erase(std::find(sib.begin(), sib.end(), child));
  }
  parent_[child] = parent;
  children_[parent].push_back(child);
}

std::optional<NodeId> TreeDecomposition::parent(NodeId t) const {
  if (parent_[t] < 0) return std::nullopt;
  return parent_[t];
}

std::vector<NodeId> TreeDecomposition::preorder() const {
  std::vector<NodeId> order;
  if (empty()) return order;
  std::vector<NodeId> stack{root_};
  std::vector<char> seen(size(), 0);
  while (!stack.empty()) {
    NodeId t = stack.back();
    stack.pop_back();
    if (seen[t]) continue;  // only reachable on malformed input
    seen[t] = 1;
    order.push_back(t);
    for (auto it = children_[t].rbegin(); it != children_[t].rend(); ++it) stack.push_back(*it);
  }
  return order;
}

Vertex TreeDecomposition::max_vertex() const {
  Vertex m = 0;
  for (const auto& b : bags_)
    if (!b.empty()) m = std::max(m, b.back());
  return m;
}

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
  ValidationReport r;
  auto& v = r.violations;
  if (td.empty()) {
    v.push_back("empty decomposition");
    return r;
  }
  const int n = g.num_vertices();
  if (td.root() < 0 || td.root() >= td.size()) {
    v.push_back("root out of range");
    return r;
  }
  if (td.parent(td.root())) v.push_back("root has a parent");
  const auto order = td.preorder();
  if (static_cast<int>(order.size()) != td.size())
    v.push_back("tree: " + std::to_string(td.size() - static_cast<int>(order.size())) +
                " node(s) not reachable from the root");
  for (NodeId t = 0; t < td.size(); ++t)
    for (NodeId c : td.children(t))
      if (td.parent(c) != t) v.push_back("tree: node " + std::to_string(c) + " has inconsistent parent");

  std::vector<std::vector<NodeId>> occ(n + 1);
  for (NodeId t = 0; t < td.size(); ++t) {
    const auto& b = td.bag(t);
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end())
      v.push_back("bag " + std::to_string(t) + " not a sorted set");
    for (Vertex x : b) {
      if (x < 1 || x > n) {
        v.push_back("bag " + std::to_string(t) + ": vertex " + std::to_string(x) + " out of range");
        continue;
      }
      occ[x].push_back(t);
    }
  }
  if (!v.empty()) return r;

  for (Vertex x = 1; x <= n; ++x) {
    if (occ[x].empty()) {
      v.push_back("connectedness: vertex " + std::to_string(x) + " in no bag");
      continue;
    }
    int tops = 0;
    for (NodeId t : occ[x]) {
      auto p = td.parent(t);
      if (!p || !std::binary_search(td.bag(*p).begin(), td.bag(*p).end(), x)) ++tops;
    }
    if (tops != 1)
      v.push_back("connectedness: vertex " + std::to_string(x) + " occurs in " + std::to_string(tops) +
                  " disconnected subtrees");
  }
  for (const auto& [a, b] : g.edges()) {
    const auto& A = occ[a];
    const auto& B = occ[b];
    bool found = false;
    for (std::size_t i = 0, j = 0; i < A.size() && j < B.size();) {
      if (A[i] == B[j]) {
        found = true;
        break;
      }
      if (A[i] < B[j]) ++i; else ++j;
    }
    if (!found) v.push_back("covering: edge {" + std::to_string(a) + "," + std::to_string(b) + "} in no bag");
  }
  return r;
}

void require_valid(const Graph& g, const TreeDecomposition& td, const std::string& what) {
  auto rep = validate(g, td);
  if (rep.ok()) return;
  std::string msg = what + " is not a valid tree decomposition:";
  for (std::size_t i = 0; i < rep.violations.size() && i < 5; ++i) msg += " " + rep.violations[i] + ";";
  throw PreconditionError(msg);
}

int width(const TreeDecomposition& td) {
  if (td.empty()) throw PreconditionError("width of an empty decomposition");
  std::size_t m = 0;
  for (NodeId t = 0; t < td.size(); ++t) m = std::max(m, td.bag(t).size());
  return static_cast<int>(m) - 1;
}

namespace {

struct EliminationGraph {
  std::vector<std::set<Vertex>> adj;

  explicit EliminationGraph(const Graph& g) : adj(g.num_vertices() + 1) {
    for (Vertex v = 1; v <= g.num_vertices(); ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  }

  long fill_in(Vertex v) const {
    long missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
      for (auto b = std::next(a); b != adj[v].end(); ++b)
        if (!adj[*a].count(*b)) ++missing;
    return missing;
  }

  /// Removes v, turning its neighborhood into a clique. Returns the neighborhood.
  std::vector<Vertex> eliminate(Vertex v) {
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    for (Vertex a : nb) {
      adj[a].erase(v);
      for (Vertex b : nb)
        if (a != b) adj[a].insert(b);
    }
    adj[v].clear();
    return nb;
  }
};

}  // namespace

TreeDecomposition td_from_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.num_vertices();
  TreeDecomposition td;
  if (n == 0) {
    td.add_node({});
    return td;
  }
  if (static_cast<int>(order.size()) != n) throw PreconditionError("elimination order must list every vertex");
  std::vector<int> pos(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 1 || order[i] > n || pos[order[i]] >= 0) throw PreconditionError("bad elimination order");
    pos[order[i]] = i;
  }
  EliminationGraph eg(g);
  std::vector<std::vector<Vertex>> later(n);
  for (int i = 0; i < n; ++i) {
    later[i] = eg.eliminate(order[i]);
    Bag bag = later[i];
    bag.push_back(order[i]);
    td.add_node(std::move(bag));
  }
  for (int i = 0; i + 1 < n; ++i) {
    int parent = i + 1;
    if (!later[i].empty()) {
      parent = n;
      for (Vertex u : later[i]) parent = std::min(parent, pos[u]);
    }
    td.set_parent(i, parent);
  }
  td.set_root(n - 1);
  return td;
}

TreeDecomposition heuristic_td(const Graph& g, Heuristic strategy, unsigned seed) {
  const int n = g.num_vertices();
  std::vector<long> tiebreak(n + 1);
  std::iota(tiebreak.begin(), tiebreak.end(), 0);
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::shuffle(tiebreak.begin() + 1, tiebreak.end(), rng);
  }
  EliminationGraph eg(g);
  std::vector<long> score(n + 1, 0);
  std::vector<char> alive(n + 1, 1), dirty(n + 1, 1);
  auto rescore = [&](Vertex v) {
    score[v] = strategy == Heuristic::kMinFill ? eg.fill_in(v) : static_cast<long>(eg.adj[v].size());
    dirty[v] = 0;
  };
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (!alive[v]) continue;
      if (dirty[v]) rescore(v);
      if (best == 0 || score[v] < score[best] || (score[v] == score[best] && tiebreak[v] < tiebreak[best]))
        best = v;
    }
    order.push_back(best);
    alive[best] = 0;
    auto nb = eg.eliminate(best);
    for (Vertex a : nb) {
      dirty[a] = 1;
      if (strategy == Heuristic::kMinFill)
        for (Vertex b : eg.adj[a]) dirty[b] = 1;
    }
  }
  return td_from_elimination_order(g, order);
}

namespace {

Bag intersect(const Bag& a, const Bag& b) {
  Bag out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Bag difference(const Bag& a, const Bag& b) {
  Bag out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TreeDecomposition make_special_form(const TreeDecomposition& td) {
  if (td.empty()) throw PreconditionError("special form of an empty decomposition");
  TreeDecomposition out;
  // Chain of one-vertex introductions from `from` (bag `from_bag`) up to `target`.
  auto build_up = [&](NodeId from, const Bag& from_bag, const Bag& target) {
    NodeId cur = from;
    Bag cur_bag = intersect(from_bag, target);
    if (cur_bag != from_bag) {
      NodeId f = out.add_node(cur_bag);
      out.set_parent(cur, f);
      cur = f;
    }
    for (Vertex v : difference(target, from_bag)) {
      cur_bag.insert(std::lower_bound(cur_bag.begin(), cur_bag.end(), v), v);
      NodeId i = out.add_node(cur_bag);
      out.set_parent(cur, i);
      cur = i;
    }
    return cur;
  };

  std::vector<NodeId> image(td.size(), -1);
  auto order = td.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId t = *it;
    const Bag& bag = td.bag(t);
    const auto& kids = td.children(t);
    if (kids.empty()) {
      if (bag.empty()) {
        image[t] = out.add_node({});
      } else {
        NodeId leaf = out.add_node({bag.front()});
        image[t] = build_up(leaf, {bag.front()}, bag);
      }
      continue;
    }
    std::vector<NodeId> tops;
    for (NodeId c : kids) tops.push_back(build_up(image[c], td.bag(c), bag));
    NodeId joined = tops.front();
    for (std::size_t k = 1; k < tops.size(); ++k) {
      NodeId j = out.add_node(bag);
      out.set_parent(joined, j);
      out.set_parent(tops[k], j);
      joined = j;
    }
    image[t] = joined;
  }
  out.set_root(image[td.root()]);
  return out;
}

bool is_special_form(const TreeDecomposition& td) {
  for (NodeId t = 0; t < td.size(); ++t) {
    const auto& kids = td.children(t);
    const auto& bag = td.bag(t);
    switch (kids.size()) {
      case 0:
        if (bag.size() > 1) return false;
        break;
      case 1:
        if (difference(bag, td.bag(kids[0])).size() > 1) return false;
        break;
      case 2:
        if (td.bag(kids[0]) != bag || td.bag(kids[1]) != bag) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

NodeId root_of(const TreeDecomposition& td, Vertex v) {
  for (NodeId t : td.preorder())
    if (std::binary_search(td.bag(t).begin(), td.bag(t).end(), v)) return t;
  throw PreconditionError("vertex " + std::to_string(v) + " occurs in no bag");
}

}  // namespace twred
