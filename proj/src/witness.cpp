#include "witness.hpp"

#include "twred/error.hpp"

#include <algorithm>

namespace twred::detail {

TdEditor::TdEditor(const TreeDecomposition& td) : td_(td) {
  for (NodeId t = 0; t < td_.size(); ++t)
    for (Vertex v : td_.bag(t)) index(t, v);
}

TdEditor TdEditor::incidence(const TreeDecomposition& td, int num_vars) {
  TreeDecomposition sym = td;
  for (NodeId t = 0; t < sym.size(); ++t) {
    auto& bag = sym.bag(t);
    for (Vertex& v : bag)
      if (v > num_vars) v = clause_sym(v - num_vars - 1);
    std::sort(bag.begin(), bag.end());
  }
  return TdEditor(sym);
}

bool TdEditor::contains(NodeId t, Vertex v) const {
  const auto& b = td_.bag(t);
  return std::binary_search(b.begin(), b.end(), v);
}

NodeId TdEditor::find(const std::vector<Vertex>& s) const {
  if (s.empty()) return td_.root();
  const std::vector<NodeId>* best = nullptr;
  for (Vertex v : s) {
    auto it = occ_.find(v);
    if (it == occ_.end()) throw InvariantError("witness: vertex " + std::to_string(v) + " in no bag");
    if (!best || it->second.size() < best->size()) best = &it->second;
  }
  for (NodeId t : *best)
    if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return contains(t, v); })) return t;
  throw InvariantError("witness: no bag covers the requested vertex set");
}

NodeId TdEditor::attach(NodeId at, Bag bag) {
  NodeId t = td_.add_node(std::move(bag), at);
  for (Vertex v : td_.bag(t)) index(t, v);
  return t;
}

void TdEditor::replace(Vertex v, const std::vector<Vertex>& with) {
  auto it = occ_.find(v);
  if (it == occ_.end()) return;
  std::vector<NodeId> nodes = std::move(it->second);
  occ_.erase(it);
  for (NodeId t : nodes) {
    auto& bag = td_.bag(t);
    bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
    for (Vertex u : with) {
      auto pos = std::lower_bound(bag.begin(), bag.end(), u);
      if (pos != bag.end() && *pos == u) continue;
      bag.insert(pos, u);
      index(t, u);
    }
  }
}

TreeDecomposition TdEditor::release(const std::function<Vertex(Vertex)>& relabel) const {
  TreeDecomposition out = td_;
  for (NodeId t = 0; t < out.size(); ++t) {
    auto& bag = out.bag(t);
    for (Vertex& v : bag) v = relabel(v);
    std::sort(bag.begin(), bag.end());
  }
  return out;
}

TreeDecomposition TdEditor::release_incidence(int num_vars) const {
  return release([num_vars](Vertex v) { return v < 0 ? num_vars - v : v; });
}

std::vector<Vertex> vars_of(const Clause& c) {
  std::vector<Vertex> vs;
  for (const auto& l : c.literals) vs.push_back(l.var);
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::function<Vertex(Vertex)> ClauseIds::relabel(int num_vars) const {
  return [this, num_vars](Vertex v) {
    if (v > 0) return v;
    auto it = final_.find(v);
    if (it == final_.end()) throw InvariantError("witness: clause symbol without a final position");
    return clause_vertex(num_vars, it->second);
  };
}

void check_witness(const WeightedCnf& phi, const Witness& w) {
  if (w.primal) require_valid(primal_graph(phi), *w.primal, "primal witness");
  if (w.incidence) require_valid(incidence_graph(phi), *w.incidence, "incidence witness");
}

ReductionTrace extend_trace(int n_in, int n_out) {
  ReductionTrace t = ReductionTrace::identity(n_in);
  t.output_vars = n_out;
  return t;
}

}  // namespace twred::detail
