#include "twred/solve.hpp"

#include "bag_dp.hpp"
#include "twred/error.hpp"
#include "twred/graph.hpp"

#include <algorithm>
#include <cstdint>

namespace twred {

namespace {

using State = std::uint64_t;

enum class Kind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceNode {
  Bag bag;
  Kind kind = Kind::kLeaf;
  Vertex vertex = 0;  // introduced or forgotten
  std::vector<int> children;
};

// Leaf / introduce / forget / join refinement with an empty root bag.
std::vector<NiceNode> make_nice(const TreeDecomposition& td, int& root) {
  std::vector<NiceNode> nodes;
  auto add = [&](NiceNode nd) {
    nodes.push_back(std::move(nd));
    return static_cast<int>(nodes.size()) - 1;
  };
  // Walks from node `from` to `target` by forgetting then introducing single vertices.
  auto walk = [&](int from, const Bag& target) {
    int cur = from;
    Bag b = nodes[cur].bag;
    for (Vertex v : Bag(b)) {
      if (std::binary_search(target.begin(), target.end(), v)) continue;
      b.erase(std::lower_bound(b.begin(), b.end(), v));
      cur = add({b, Kind::kForget, v, {cur}});
    }
    for (Vertex v : target) {
      if (std::binary_search(b.begin(), b.end(), v)) continue;
      b.insert(std::lower_bound(b.begin(), b.end(), v), v);
      cur = add({b, Kind::kIntroduce, v, {cur}});
    }
    return cur;
  };
  std::vector<int> image(td.size(), -1);
  const auto order = td.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId t = *it;
    const auto& kids = td.children(t);
    if (kids.empty()) {
      image[t] = walk(add({{}, Kind::kLeaf, 0, {}}), td.bag(t));
      continue;
    }
    int joined = walk(image[kids[0]], td.bag(t));
    for (std::size_t k = 1; k < kids.size(); ++k) {
      int other = walk(image[kids[k]], td.bag(t));
      joined = add({td.bag(t), Kind::kJoin, 0, {joined, other}});
    }
    image[t] = joined;
  }
  root = walk(image[td.root()], {});
  return nodes;
}

class IncidenceDp {
 public:
  IncidenceDp(const WeightedCnf& phi, const TreeDecomposition& td) : phi_(phi), n_(phi.num_vars) {
    nodes_ = make_nice(td, root_);
    cap_ = std::size_t{1} << (width(td) + 1);
    for (const auto& nd : nodes_)
      if (static_cast<int>(nd.bag.size()) > detail::kMaxBag)
        throw SizeError("bag of " + std::to_string(nd.bag.size()) + " vertices exceeds the DP limit");
  }

  Optimum solve() {
    tables_.assign(nodes_.size(), {});
    // Children always precede their parents in `nodes_`.
    for (std::size_t t = 0; t < nodes_.size(); ++t) compute(static_cast<int>(t));
    Optimum o;
    o.value = tables_[root_][0];
    for (const auto& tab : tables_) o.max_table_entries = std::max(o.max_table_entries, tab.size());
    if (o.value.is_infinite()) {
      o.witness = Assignment(n_);
      return o;
    }
    std::vector<bool> value(n_ + 1, false);
    std::vector<std::pair<int, State>> stack{{root_, 0}};
    while (!stack.empty()) {
      auto [t, s] = stack.back();
      stack.pop_back();
      const auto& nd = nodes_[t];
      for (std::size_t i = 0; i < nd.bag.size(); ++i)
        if (nd.bag[i] <= n_) value[nd.bag[i]] = (s >> i) & 1U;
      if (nd.kind == Kind::kLeaf) continue;
      if (nd.kind == Kind::kJoin) {
        auto [a, b] = join_parts(t, s);
        stack.push_back({nd.children[0], a});
        stack.push_back({nd.children[1], b});
        continue;
      }
      const int c = nd.children[0];
      const auto& tab = tables_[c];
      bool found = false;
      for (State cs = 0; cs < tab.size() && !found; ++cs) {
        for (const auto& [ps, cost] : step(t, cs)) {
          if (ps == s && tab[cs] + cost == tables_[t][s]) {
            stack.push_back({c, cs});
            found = true;
            break;
          }
        }
      }
      if (!found) throw InvariantError("incidence DP: reconstruction failed");
    }
    o.witness = Assignment(std::vector<bool>(value.begin() + 1, value.end()));
    return o;
  }

 private:
  bool is_clause(Vertex v) const { return v > n_; }
  const Clause& clause(Vertex v) const { return phi_.clauses[v - n_ - 1]; }

  static int pos(const Bag& b, Vertex v) {
    return static_cast<int>(std::lower_bound(b.begin(), b.end(), v) - b.begin());
  }

  // Does the current value of some variable in the bag satisfy clause c?
  bool satisfied_in_bag(const Bag& bag, State s, const Clause& c) const {
    for (const auto& l : c.literals) {
      if (!std::binary_search(bag.begin(), bag.end(), l.var)) continue;
      if (l.satisfied_by((s >> pos(bag, l.var)) & 1U)) return true;
    }
    return false;
  }

  // Inserts bit `value` at position p.
  static State insert_bit(State s, int p, bool value) {
    const State low = s & ((State{1} << p) - 1);
    return ((s >> p) << (p + 1)) | (State(value) << p) | low;
  }
  static State erase_bit(State s, int p) {
    const State low = s & ((State{1} << p) - 1);
    return ((s >> (p + 1)) << p) | low;
  }

  // Parent states reached from child state cs of unary node t, with the cost added.
  std::vector<std::pair<State, Weight>> step(int t, State cs) const {
    const auto& nd = nodes_[t];
    const int p = pos(nd.bag, nd.vertex);
    std::vector<std::pair<State, Weight>> out;
    if (nd.kind == Kind::kForget) {
      const auto& cb = nodes_[nd.children[0]].bag;
      const int cp = pos(cb, nd.vertex);
      Weight cost = 0;
      if (is_clause(nd.vertex) && !((cs >> cp) & 1U)) cost = clause(nd.vertex).weight;
      out.push_back({erase_bit(cs, cp), cost});
      return out;
    }
    if (is_clause(nd.vertex)) {
      State s = insert_bit(cs, p, false);
      s |= State(satisfied_in_bag(nd.bag, s, clause(nd.vertex))) << p;
      out.push_back({s, 0});
      return out;
    }
    for (bool value : {false, true}) {
      State s = insert_bit(cs, p, value);
      for (std::size_t i = 0; i < nd.bag.size(); ++i) {
        if (!is_clause(nd.bag[i])) continue;
        for (const auto& l : clause(nd.bag[i]).literals)
          if (l.var == nd.vertex && l.satisfied_by(value)) s |= State{1} << i;
      }
      out.push_back({s, 0});
    }
    return out;
  }

  State clause_bits(const Bag& bag) const {
    State m = 0;
    for (std::size_t i = 0; i < bag.size(); ++i)
      if (is_clause(bag[i])) m |= State{1} << i;
    return m;
  }

  void compute(int t) {
    const auto& nd = nodes_[t];
    std::vector<Weight> tab(std::size_t{1} << nd.bag.size(), Weight::infinity());
    if (nd.kind == Kind::kLeaf) {
      tab[0] = 0;
    } else if (nd.kind == Kind::kJoin) {
      const auto& a = tables_[nd.children[0]];
      const auto& b = tables_[nd.children[1]];
      const State cm = clause_bits(nd.bag);
      for (State x = 0; x < a.size(); ++x) {
        if (a[x].is_infinite()) continue;
        const State vars = x & ~cm;
        // Enumerate the clause bits of the second child over the same variable values.
        for (State y = cm;; y = (y - 1) & cm) {
          const State s2 = vars | y;
          if (b[s2].is_finite()) {
            Weight v = a[x] + b[s2];
            State s = x | y;
            if (v < tab[s]) tab[s] = v;
          }
          if (y == 0) break;
        }
      }
    } else {
      const auto& c = tables_[nd.children[0]];
      for (State cs = 0; cs < c.size(); ++cs) {
        if (c[cs].is_infinite()) continue;
        for (const auto& [s, cost] : step(t, cs)) {
          Weight v = c[cs] + cost;
          if (v < tab[s]) tab[s] = v;
        }
      }
    }
    if (tab.size() > cap_) throw InvariantError("DP table larger than 2^(width+1)");
    tables_[t] = std::move(tab);
  }

  std::pair<State, State> join_parts(int t, State s) const {
    const auto& nd = nodes_[t];
    const auto& a = tables_[nd.children[0]];
    const auto& b = tables_[nd.children[1]];
    const State cm = clause_bits(nd.bag);
    const State vars = s & ~cm;
    const State want = s & cm;
    for (State x = want;; x = (x - 1) & want) {
      for (State y = want;; y = (y - 1) & want) {
        if ((x | y) == want && a[vars | x].is_finite() && b[vars | y].is_finite() &&
            a[vars | x] + b[vars | y] == tables_[t][s])
          return {vars | x, vars | y};
        if (y == 0) break;
      }
      if (x == 0) break;
    }
    throw InvariantError("incidence DP: join reconstruction failed");
  }

  const WeightedCnf& phi_;
  int n_;
  std::vector<NiceNode> nodes_;
  int root_ = 0;
  std::size_t cap_ = 0;
  std::vector<std::vector<Weight>> tables_;
};

}  // namespace

Optimum dp_maxsat_incidence(const WeightedCnf& phi, const TreeDecomposition& td_inc) {
  phi.check();
  require_valid(incidence_graph(phi), td_inc, "incidence decomposition");
  IncidenceDp dp(phi, td_inc);
  return dp.solve();
}

}  // namespace twred
