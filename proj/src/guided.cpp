#include "twred/reduce.hpp"

#include "twred/error.hpp"
#include "witness.hpp"

#include <algorithm>
#include <map>

namespace twred {

namespace {

bool has(const Bag& b, Vertex v) { return std::binary_search(b.begin(), b.end(), v); }

Bag with(Bag b, Vertex v) {
  auto pos = std::lower_bound(b.begin(), b.end(), v);
  if (pos == b.end() || *pos != v) b.insert(pos, v);
  return b;
}

Bag without(Bag b, Vertex v) {
  auto pos = std::lower_bound(b.begin(), b.end(), v);
  if (pos != b.end() && *pos == v) b.erase(pos);
  return b;
}

/// The ternary encoding together with the bookkeeping the witness builders need.
struct Guided {
  int n = 0;
  TreeDecomposition td;  // refined special form of the incidence decomposition
  std::vector<NodeId> order;
  std::vector<std::vector<Var>> copy;  // copy[t][i] carries bag(t)[i]
  std::vector<NodeId> top;             // per incidence vertex: topmost node
  WeightedCnf psi;
  ReductionTrace trace;
  std::vector<std::size_t> cost_idx;
  std::map<std::pair<NodeId, Vertex>, std::size_t> sync_idx;    // (child, x): first of two clauses
  std::map<std::pair<NodeId, Vertex>, std::size_t> reason_idx;  // (t, c)

  bool is_clause(Vertex v) const { return v > n; }

  Var cp(NodeId t, Vertex v) const {
    const Bag& b = td.bag(t);
    auto pos = std::lower_bound(b.begin(), b.end(), v);
    if (pos == b.end() || *pos != v) throw InvariantError("guided: no copy of vertex in bag");
    return copy[t][pos - b.begin()];
  }

  std::vector<NodeId> kids_with(NodeId t, Vertex v) const {
    std::vector<NodeId> out;
    for (NodeId c : td.children(t))
      if (has(td.bag(c), v)) out.push_back(c);
    return out;
  }

  Bag top_bag(NodeId t) const {
    Bag b(copy[t].begin(), copy[t].end());
    std::sort(b.begin(), b.end());
    return b;
  }
};

// Nodes that introduce a clause vertex get an extra child chain
// {c, x1..xr}, {c, x1..x(r-1)}, ..., {c} over the clause's variables in the
// bag, so that each reason clause has at most three literals.
TreeDecomposition refine(const TreeDecomposition& special, const WeightedCnf& phi) {
  TreeDecomposition td = special;
  const int n = phi.num_vars;
  const int orig = td.size();
  for (NodeId t = 0; t < orig; ++t) {
    const Bag bag = td.bag(t);
    for (Vertex c : bag) {
      if (c <= n) continue;
      bool below = false;
      for (NodeId ch : td.children(t)) below |= has(td.bag(ch), c);
      if (below) continue;
      Bag vs;
      for (const auto& l : phi.clauses[c - n - 1].literals)
        if (has(bag, l.var)) vs.push_back(l.var);
      if (vs.empty()) continue;
      std::sort(vs.begin(), vs.end());
      NodeId p = t;
      while (true) {
        Bag b = vs;
        b.push_back(c);
        p = td.add_node(b, p);
        if (vs.empty()) break;
        vs.pop_back();
      }
    }
  }
  return td;
}

Guided build(const WeightedCnf& phi, const TreeDecomposition& td_inc) {
  phi.check();
  require_valid(incidence_graph(phi), td_inc, "incidence decomposition");
  Guided g;
  g.n = phi.num_vars;
  g.td = refine(make_special_form(td_inc), phi);
  g.order = g.td.preorder();
  const int n = g.n;
  const std::size_t m = phi.clauses.size();

  g.psi.num_vars = n;
  g.top.assign(n + m + 1, -1);
  g.copy.resize(g.td.size());
  g.trace = ReductionTrace::identity(n);
  for (NodeId t : g.order) {
    for (Vertex v : g.td.bag(t)) {
      Var id;
      if (!g.is_clause(v) && g.top[v] < 0) {
        id = v;
      } else {
        id = g.psi.fresh_var();
        g.trace.fresh.push_back({id, "guided", g.is_clause(v) ? static_cast<long>(v - n - 1) : -1});
      }
      if (g.top[v] < 0) g.top[v] = t;
      g.copy[t].push_back(id);
    }
  }

  for (std::size_t j = 0; j < m; ++j) {
    const Vertex c = clause_vertex(n, j);
    g.cost_idx.push_back(g.psi.clauses.size());
    g.psi.add({Literal::pos(g.cp(g.top[c], c))}, phi.clauses[j].weight);
  }
  for (NodeId t : g.order) {
    const Bag& bag = g.td.bag(t);
    for (NodeId ch : g.td.children(t))
      for (Vertex x : bag) {
        if (g.is_clause(x) || !has(g.td.bag(ch), x)) continue;
        g.sync_idx[{ch, x}] = g.psi.clauses.size();
        g.psi.add({Literal::neg(g.cp(t, x)), Literal::pos(g.cp(ch, x))}, Weight::infinity());
        g.psi.add({Literal::pos(g.cp(t, x)), Literal::neg(g.cp(ch, x))}, Weight::infinity());
      }
    for (Vertex c : bag) {
      if (!g.is_clause(c)) continue;
      const auto kids = g.kids_with(t, c);
      std::vector<Literal> lits{Literal::neg(g.cp(t, c))};
      for (const auto& l : phi.clauses[c - n - 1].literals) {
        if (!has(bag, l.var)) continue;
        bool lower = std::any_of(kids.begin(), kids.end(), [&](NodeId k) { return has(g.td.bag(k), l.var); });
        if (!lower) lits.push_back({g.cp(t, l.var), l.negative});
      }
      for (NodeId k : kids) lits.push_back(Literal::pos(g.cp(k, c)));
      if (lits.size() > 3) throw InvariantError("guided: reason clause with more than three literals");
      g.reason_idx[{t, c}] = g.psi.clauses.size();
      g.psi.add(std::move(lits), Weight::infinity());
    }
  }
  g.trace.output_vars = g.psi.num_vars;
  return g;
}

/// Chain-building helpers over a witness decomposition under construction.
struct Builder {
  TreeDecomposition w;
  NodeId step(NodeId cur, Bag b) {
    if (w.bag(cur) == b) return cur;
    return w.add_node(std::move(b), cur);
  }
  NodeId add(NodeId cur, Vertex v) { return step(cur, with(w.bag(cur), v)); }
  NodeId remove(NodeId cur, Vertex v) { return step(cur, without(w.bag(cur), v)); }
  NodeId leaf(NodeId cur, Bag b) {
    std::sort(b.begin(), b.end());
    return w.add_node(std::move(b), cur);
  }
};

// Reason clauses sit inside the bags: each one replaces its clause copy on
// the way down and gives way to the child copies. Width max(k+1, 2).
TreeDecomposition witness3(const Guided& g) {
  const int N = g.psi.num_vars;
  auto C = [N](std::size_t k) { return clause_vertex(N, k); };
  Builder b;
  const NodeId root = g.td.root();
  std::vector<std::pair<NodeId, NodeId>> stack{{root, b.w.add_node(g.top_bag(root))}};
  while (!stack.empty()) {
    auto [t, top] = stack.back();
    stack.pop_back();
    const Bag& bag = g.td.bag(t);
    NodeId cur = top;
    for (Vertex c : bag) {
      if (!g.is_clause(c)) continue;
      if (g.top[c] == t) b.leaf(top, {g.cp(t, c), C(g.cost_idx[c - g.n - 1])});
      cur = b.add(cur, C(g.reason_idx.at({t, c})));
      cur = b.remove(cur, g.cp(t, c));
    }
    const NodeId x_node = cur;
    for (NodeId ch : g.td.children(t)) {
      const Bag& cb = g.td.bag(ch);
      cur = x_node;
      Bag keep;
      for (Vertex v : bag) {
        if (!has(cb, v)) continue;
        if (g.is_clause(v)) {
          cur = b.add(cur, g.cp(ch, v));
          cur = b.remove(cur, C(g.reason_idx.at({t, v})));
          keep.push_back(g.cp(ch, v));
        } else {
          keep.push_back(g.cp(t, v));
        }
      }
      std::sort(keep.begin(), keep.end());
      cur = b.step(cur, keep);
      for (Vertex x : bag) {
        if (g.is_clause(x) || !has(cb, x)) continue;
        cur = b.add(cur, g.cp(ch, x));
        const std::size_t s = g.sync_idx.at({ch, x});
        b.leaf(cur, {g.cp(t, x), g.cp(ch, x), C(s)});
        b.leaf(cur, {g.cp(t, x), g.cp(ch, x), C(s + 1)});
        cur = b.remove(cur, g.cp(t, x));
      }
      cur = b.step(cur, g.top_bag(ch));
      stack.push_back({ch, cur});
    }
  }
  return b.w;
}

}  // namespace

ReductionResult encode3_guided(const WeightedCnf& phi, const TreeDecomposition& td_inc) {
  Guided g = build(phi, td_inc);
  ReductionResult r{g.psi, g.trace, std::nullopt, witness3(g)};
  return r;
}

namespace {

// Where each clause of the ternary encoding ended up after Rule 5.
struct Rule5Map {
  std::vector<std::size_t> index;  // non-ternary: output index; ternary: first gadget clause
  std::vector<Var> aux;            // ternary: gadget variable, else 0
};

Rule5Map replay_rule5(const WeightedCnf& psi3) {
  Rule5Map m;
  std::size_t next = 0;
  Var a = psi3.num_vars;
  for (const auto& c : psi3.clauses) {
    m.index.push_back(next);
    if (c.size() == 3) {
      m.aux.push_back(++a);
      next += 6;
    } else {
      m.aux.push_back(0);
      next += 1;
    }
  }
  return m;
}

// Clause copies stay in the bags and each ternary reason gets its gadget
// in a side bag. At joins the second child's copies are only added after
// the first child has forked off. Width max(k+1, 2k+1, k+2, 3).
TreeDecomposition witness2(const Guided& g, const WeightedCnf& psi2, const Rule5Map& map) {
  const int N = psi2.num_vars;
  auto C = [N](std::size_t k) { return clause_vertex(N, k); };
  Builder b;
  auto attach_reason = [&](NodeId at, std::size_t j3) {
    const Clause& cl = g.psi.clauses[j3];
    Bag vs = detail::vars_of(cl);
    for (Vertex v : vs)
      if (!has(b.w.bag(at), v)) throw InvariantError("guided witness: reason variables not in bag");
    if (cl.size() != 3) {
      vs.push_back(C(map.index[j3]));
      b.leaf(at, vs);
      return;
    }
    vs.push_back(map.aux[j3]);
    NodeId gnode = b.leaf(at, vs);
    for (std::size_t k = map.index[j3]; k < map.index[j3] + 6; ++k) {
      Bag leaf = detail::vars_of(psi2.clauses[k]);
      leaf.push_back(C(k));
      b.leaf(gnode, leaf);
    }
  };

  const NodeId root = g.td.root();
  std::vector<std::pair<NodeId, NodeId>> stack{{root, b.w.add_node(g.top_bag(root))}};
  while (!stack.empty()) {
    auto [t, top] = stack.back();
    stack.pop_back();
    const Bag& bag = g.td.bag(t);
    const auto& kids = g.td.children(t);
    std::vector<Vertex> joined;
    for (Vertex c : bag) {
      if (!g.is_clause(c)) continue;
      if (g.top[c] == t) b.leaf(top, {g.cp(t, c), C(map.index[g.cost_idx[c - g.n - 1]])});
      const auto k = g.kids_with(t, c);
      if (k.empty()) attach_reason(top, g.reason_idx.at({t, c}));
      if (k.size() == 2) joined.push_back(c);
    }

    std::map<NodeId, NodeId> start;
    for (NodeId ch : kids) start[ch] = top;
    if (!joined.empty()) {
      const NodeId t1 = kids[0], t2 = kids[1];
      NodeId cur = top;
      for (std::size_t i = 0; i + 1 < joined.size(); ++i) {
        const Vertex c = joined[i];
        cur = b.add(cur, g.cp(t1, c));
        cur = b.add(cur, g.cp(t2, c));
        attach_reason(cur, g.reason_idx.at({t, c}));
        cur = b.remove(cur, g.cp(t, c));
      }
      const Vertex last = joined.back();
      const NodeId fork = b.add(cur, g.cp(t1, last));
      Bag z = b.w.bag(fork);
      for (std::size_t i = 0; i + 1 < joined.size(); ++i) z = without(z, g.cp(t1, joined[i]));
      z = with(z, g.cp(t2, last));
      const NodeId zn = b.w.add_node(z, fork);
      attach_reason(zn, g.reason_idx.at({t, last}));
      start[t1] = fork;
      start[t2] = zn;
    }

    for (NodeId ch : kids) {
      const Bag& cb = g.td.bag(ch);
      NodeId cur = start[ch];
      Bag keep;
      for (Vertex v : bag) {
        if (!has(cb, v)) continue;
        if (g.is_clause(v)) {
          if (!has(b.w.bag(cur), g.cp(ch, v))) {
            cur = b.add(cur, g.cp(ch, v));
            attach_reason(cur, g.reason_idx.at({t, v}));
            cur = b.remove(cur, g.cp(t, v));
          }
          keep.push_back(g.cp(ch, v));
        } else {
          keep.push_back(g.cp(t, v));
        }
      }
      std::sort(keep.begin(), keep.end());
      cur = b.step(cur, keep);
      for (Vertex x : bag) {
        if (g.is_clause(x) || !has(cb, x)) continue;
        cur = b.add(cur, g.cp(ch, x));
        const std::size_t s = g.sync_idx.at({ch, x});
        b.leaf(cur, {g.cp(t, x), g.cp(ch, x), C(map.index[s])});
        b.leaf(cur, {g.cp(t, x), g.cp(ch, x), C(map.index[s + 1])});
        cur = b.remove(cur, g.cp(t, x));
      }
      cur = b.step(cur, g.top_bag(ch));
      stack.push_back({ch, cur});
    }
  }
  return b.w;
}

}  // namespace

ReductionResult encode2_guided(const WeightedCnf& phi, const TreeDecomposition& td_inc) {
  Guided g = build(phi, td_inc);
  ReductionResult r4 = rule4_soften(g.psi);
  const BigInt h = r4.trace.h->value();
  ReductionResult r5 = rule5_to2(r4.formula(), h);
  const Rule5Map map = replay_rule5(g.psi);
  ReductionResult r{r5.instance, compose(compose(g.trace, r4.trace), r5.trace), std::nullopt, std::nullopt};
  r.td_incidence = witness2(g, r5.formula(), map);
  return r;
}

}  // namespace twred
