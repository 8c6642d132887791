#include "twred/io.hpp"

#include "text.hpp"

#include <algorithm>
#include <sstream>

namespace twred {

using detail::to_int;

ParsedTd parse_td(const std::string& text) {
  long long nb = -1, declared = 0, n = 0, root = 1;
  std::vector<std::optional<Bag>> bags;
  std::vector<std::vector<int>> adj;
  std::size_t edges = 0;
  for (const auto& line : detail::tokenize(text)) {
    const auto& tok = line.tokens;
    if (tok[0] == "c" || tok[0][0] == '#') continue;
    if (tok[0] == "s") {
      if (nb >= 0) throw ParseError("duplicate header", line.number);
      if (tok.size() != 5 || tok[1] != "td") throw ParseError("expected 's td B W+1 n'", line.number);
      nb = to_int(tok[2], line.number);
      declared = to_int(tok[3], line.number);
      n = to_int(tok[4], line.number);
      if (nb < 0 || declared < 0 || n < 0) throw ParseError("negative count in header", line.number);
      bags.assign(nb, std::nullopt);
      adj.assign(nb, {});
      continue;
    }
    if (nb < 0) throw ParseError("content before the 's td' header", line.number);
    auto id = [&](const std::string& s) {
      long long v = to_int(s, line.number);
      if (v < 1 || v > nb) throw ParseError("bag id " + s + " out of range", line.number);
      return static_cast<int>(v - 1);
    };
    if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError("bag line without id", line.number);
      const int b = id(tok[1]);
      if (bags[b]) throw ParseError("duplicate bag id " + tok[1], line.number);
      Bag bag;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        long long v = to_int(tok[i], line.number);
        if (v < 1 || v > n) throw ParseError("vertex " + tok[i] + " out of range", line.number);
        bag.push_back(static_cast<Vertex>(v));
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
        throw ParseError("repeated vertex in bag " + tok[1], line.number);
      if (static_cast<long long>(bag.size()) > declared)
        throw ParseError("bag " + tok[1] + " larger than the declared width + 1", line.number);
      bags[b] = std::move(bag);
    } else if (tok[0] == "r") {
      if (tok.size() != 2) throw ParseError("expected 'r id'", line.number);
      root = id(tok[1]) + 1;
    } else {
      if (tok.size() != 2) throw ParseError("expected a tree edge 'a b'", line.number);
      const int a = id(tok[0]), b = id(tok[1]);
      if (a == b) throw ParseError("self loop in the tree", line.number);
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++edges;
    }
  }
  if (nb < 0) throw ParseError("missing 's td' header");
  for (long long b = 0; b < nb; ++b)
    if (!bags[b]) throw ParseError("bag " + std::to_string(b + 1) + " missing");
  ParsedTd out;
  out.num_vertices = static_cast<int>(n);
  if (nb == 0) return out;
  if (static_cast<long long>(edges) != nb - 1) throw ParseError("tree edges do not form a tree");
  for (long long b = 0; b < nb; ++b) out.td.add_node(*bags[b]);
  const int r = static_cast<int>(root - 1);
  std::vector<char> seen(nb, 0);
  std::vector<int> stack{r};
  seen[r] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      ++reached;
      out.td.set_parent(v, u);
      stack.push_back(v);
    }
  }
  if (static_cast<long long>(reached) != nb) throw ParseError("tree edges contain a cycle or leave bags disconnected");
  out.td.set_root(r);
  return out;
}

std::string write_td(const TreeDecomposition& td, int num_vertices) {
  std::ostringstream os;
  std::size_t big = 0;
  for (NodeId t = 0; t < td.size(); ++t) big = std::max(big, td.bag(t).size());
  os << "s td " << td.size() << ' ' << big << ' ' << num_vertices << '\n';
  for (NodeId t = 0; t < td.size(); ++t) {
    os << "b " << t + 1;
    for (Vertex v : td.bag(t)) os << ' ' << v;
    os << '\n';
  }
  for (NodeId t = 0; t < td.size(); ++t)
    for (NodeId c : td.children(t)) os << t + 1 << ' ' << c + 1 << '\n';
  if (!td.empty()) os << "r " << td.root() + 1 << '\n';
  return os.str();
}

}  // namespace twred
