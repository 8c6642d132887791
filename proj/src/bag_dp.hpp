#pragma once

#include "twred/decomposition.hpp"
#include "twred/error.hpp"
#include "twred/weight.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace twred::detail {

/// (min, +) over weights with infinity.
struct MinPlus {
  using Value = Weight;
  static constexpr bool kTrack = true;
  static Value zero() { return Weight::infinity(); }
  static Value one() { return Weight(0); }
  static void plus_into(Value& a, const Value& b) {
    if (b < a) a = b;
  }
  static void times_into(Value& a, const Value& b) { a += b; }
};

/// (+, *) over big integers.
struct SumProduct {
  using Value = BigInt;
  static constexpr bool kTrack = false;
  static Value zero() { return 0; }
  static Value one() { return 1; }
  static void plus_into(Value& a, const Value& b) { a += b; }
  static void times_into(Value& a, const Value& b) {
    if (a != 0) a *= b;
  }
};

inline constexpr int kMaxBag = 26;

/// Dynamic programming over the bags of a decomposition. Each factor is a
/// function of a few vertices; `eval(f, bits)` gives its value where bit i
/// of `bits` is the value of factor_vars[f][i]. A factor is charged at the
/// first preorder node whose bag covers its vertices.
template <class S, class Eval>
class BagDp {
 public:
  using Value = typename S::Value;

  BagDp(const TreeDecomposition& td, int num_vertices, const std::vector<std::vector<Vertex>>& factor_vars,
        Eval eval)
      : td_(td), n_(num_vertices), vars_(factor_vars), eval_(std::move(eval)) {}

  Value run() {
    const auto order = td_.preorder();
    std::vector<int> rank(td_.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    std::vector<std::vector<NodeId>> occ(n_ + 1);
    for (NodeId t = 0; t < td_.size(); ++t) {
      if (static_cast<int>(td_.bag(t).size()) > kMaxBag)
        throw SizeError("bag of " + std::to_string(td_.bag(t).size()) + " vertices exceeds the DP limit of " +
                        std::to_string(kMaxBag));
      for (Vertex v : td_.bag(t)) occ.at(v).push_back(t);
    }
    std::vector<std::vector<std::size_t>> at(td_.size());
    for (std::size_t f = 0; f < vars_.size(); ++f) {
      NodeId best = -1;
      if (vars_[f].empty()) {
        best = td_.root();
      } else {
        for (NodeId t : occ.at(vars_[f][0]))
          if ((best < 0 || rank[t] < rank[best]) && covers(t, vars_[f])) best = t;
      }
      if (best < 0) throw InvariantError("DP: no bag covers a factor");
      at[best].push_back(f);
    }

    const std::size_t cap = std::size_t{1} << (width(td_) + 1);
    tables_.assign(td_.size(), {});
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId t = *it;
      const Bag& bag = td_.bag(t);
      const std::size_t size = std::size_t{1} << bag.size();
      if (size > cap) throw InvariantError("DP table larger than 2^(width+1)");
      max_entries_ = std::max(max_entries_, size);
      std::vector<Value> table(size, S::one());
      for (std::size_t f : at[t]) {
        const auto pos = positions(bag, vars_[f]);
        for (std::size_t mask = 0; mask < size; ++mask) S::times_into(table[mask], eval_(f, gather(mask, pos)));
      }
      for (NodeId c : td_.children(t)) {
        auto [pc, pt] = shared(c, t);
        const auto msg = message(c, pc);
        for (std::size_t mask = 0; mask < size; ++mask) S::times_into(table[mask], msg[gather(mask, pt)]);
        if constexpr (!S::kTrack) std::vector<Value>().swap(tables_[c]);
      }
      tables_[t] = std::move(table);
    }
    Value total = S::zero();
    for (const auto& v : tables_[td_.root()]) S::plus_into(total, v);
    return total;
  }

  /// One optimal assignment of vertices 1..n (index 0 unused). Call after run().
  std::vector<bool> best_assignment() const {
    std::vector<bool> value(n_ + 1, false);
    const NodeId root = td_.root();
    std::vector<std::pair<NodeId, std::uint64_t>> stack{{root, argbest(tables_[root], [](std::size_t) { return true; })}};
    while (!stack.empty()) {
      auto [t, mask] = stack.back();
      stack.pop_back();
      const Bag& bag = td_.bag(t);
      for (std::size_t i = 0; i < bag.size(); ++i) value[bag[i]] = (mask >> i) & 1U;
      for (NodeId c : td_.children(t)) {
        auto [pc, pt] = shared(c, t);
        const std::uint64_t want = gather(mask, pt);
        stack.push_back({c, argbest(tables_[c], [&](std::size_t cm) { return gather(cm, pc) == want; })});
      }
    }
    return value;
  }

  std::size_t max_table_entries() const { return max_entries_; }

 private:
  bool covers(NodeId t, const std::vector<Vertex>& vs) const {
    const Bag& b = td_.bag(t);
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return std::binary_search(b.begin(), b.end(), v); });
  }

  static std::vector<int> positions(const Bag& bag, const std::vector<Vertex>& vs) {
    std::vector<int> pos;
    for (Vertex v : vs) pos.push_back(static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin()));
    return pos;
  }

  static std::uint64_t gather(std::uint64_t mask, const std::vector<int>& pos) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) out |= ((mask >> pos[i]) & 1U) << i;
    return out;
  }

  std::pair<std::vector<int>, std::vector<int>> shared(NodeId c, NodeId t) const {
    std::vector<int> pc, pt;
    const Bag& bc = td_.bag(c);
    const Bag& bt = td_.bag(t);
    for (std::size_t i = 0; i < bc.size(); ++i) {
      auto it = std::lower_bound(bt.begin(), bt.end(), bc[i]);
      if (it != bt.end() && *it == bc[i]) {
        pc.push_back(static_cast<int>(i));
        pt.push_back(static_cast<int>(it - bt.begin()));
      }
    }
    return {pc, pt};
  }

  std::vector<Value> message(NodeId c, const std::vector<int>& pc) const {
    std::vector<Value> msg(std::size_t{1} << pc.size(), S::zero());
    const auto& tab = tables_[c];
    for (std::size_t cm = 0; cm < tab.size(); ++cm) S::plus_into(msg[gather(cm, pc)], tab[cm]);
    return msg;
  }

  template <class Pred>
  static std::uint64_t argbest(const std::vector<Value>& tab, Pred ok) {
    std::size_t best = tab.size();
    for (std::size_t i = 0; i < tab.size(); ++i)
      if (ok(i) && (best == tab.size() || tab[i] < tab[best])) best = i;
    if (best == tab.size()) throw InvariantError("DP: no consistent table entry");
    return best;
  }

  const TreeDecomposition& td_;
  int n_;
  const std::vector<std::vector<Vertex>>& vars_;
  Eval eval_;
  std::vector<std::vector<Value>> tables_;
  std::size_t max_entries_ = 0;
};

}  // namespace twred::detail
