#pragma once

// Independent reference computations for the tests: plain enumeration over
// all assignments, written against the raw data structures only.

#include "twred/cnf.hpp"
#include "twred/hamiltonian.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using twred::BigInt;

// Bit (n - v) of mask is x_v, so increasing masks are lexicographic order.
inline bool bit(std::uint64_t mask, int n, int v) { return (mask >> (n - v)) & 1U; }

inline std::vector<bool> values(std::uint64_t mask, int n) {
  std::vector<bool> out(n);
  for (int v = 1; v <= n; ++v) out[v - 1] = bit(mask, n, v);
  return out;
}

inline twred::Assignment assignment(std::uint64_t mask, int n) {
  return twred::Assignment(values(mask, n));
}

// nullopt encodes an infinite cost.
inline std::optional<BigInt> cost(const twred::WeightedCnf& phi, const std::vector<bool>& x) {
  BigInt total = 0;
  for (const auto& c : phi.clauses) {
    bool sat = false;
    for (const auto& l : c.literals) sat = sat || (x[l.var - 1] != l.negative);
    if (sat) continue;
    if (c.weight.is_infinite()) return std::nullopt;
    total += c.weight.value();
  }
  return total;
}

inline BigInt energy(const twred::Hamiltonian& h, const std::vector<bool>& x) {
  BigInt e = 0;
  for (const auto& [i, w] : h.linear_terms())
    if (x[i - 1]) e += w;
  for (const auto& [p, w] : h.quadratic_terms())
    if (x[p.first - 1] && x[p.second - 1]) e += w;
  return e;
}

struct MaxSatOpt {
  std::optional<BigInt> value;       // nullopt: no finite-cost assignment
  std::vector<std::uint64_t> optima;  // ascending masks
};

inline MaxSatOpt optimum(const twred::WeightedCnf& phi) {
  MaxSatOpt best;
  int n = phi.num_vars;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    auto c = cost(phi, values(m, n));
    if (!c) continue;
    if (!best.value || *c < *best.value) {
      best.value = *c;
      best.optima.clear();
    }
    if (*c == *best.value) best.optima.push_back(m);
  }
  return best;
}

struct QuboOpt {
  BigInt value;
  std::vector<std::uint64_t> optima;
};

inline QuboOpt ground(const twred::Hamiltonian& h) {
  QuboOpt best;
  int n = h.num_vars();
  bool first = true;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    BigInt e = energy(h, values(m, n));
    if (first || e < best.value) {
      best.value = e;
      best.optima.clear();
      first = false;
    }
    if (e == best.value) best.optima.push_back(m);
  }
  return best;
}

inline BigInt count_models(const twred::WeightedCnf& psi) {
  BigInt n = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << psi.num_vars); ++m)
    if (cost(psi, values(m, psi.num_vars))) ++n;
  return n;
}

struct RandomCnf {
  int n = 6;
  int m = 8;
  int max_len = 3;
  int max_weight = 5;
  double hard_prob = 0.2;
  bool allow_zero = false;
};

inline twred::WeightedCnf random_wcnf(std::mt19937& rng, const RandomCnf& p) {
  twred::WeightedCnf phi;
  phi.num_vars = p.n;
  std::uniform_int_distribution<int> len(1, std::min(p.max_len, p.n));
  std::uniform_int_distribution<int> wt(p.allow_zero ? 0 : 1, p.max_weight);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < p.m; ++k) {
    std::vector<int> vars(p.n);
    for (int v = 1; v <= p.n; ++v) vars[v - 1] = v;
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<twred::Literal> lits;
    int q = len(rng);
    for (int i = 0; i < q; ++i) lits.push_back({vars[i], u(rng) < 0.5});
    twred::Weight w = u(rng) < p.hard_prob ? twred::Weight::infinity() : twred::Weight(wt(rng));
    phi.add(std::move(lits), w);
  }
  return phi;
}

inline twred::Hamiltonian random_qubo(std::mt19937& rng, int n, double density, int max_abs) {
  twred::Hamiltonian h(n);
  std::uniform_int_distribution<int> wt(-max_abs, max_abs);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 1; i <= n; ++i) {
    if (u(rng) < 0.7) h.add_linear(i, wt(rng));
    for (int j = i + 1; j <= n; ++j)
      if (u(rng) < density) h.add(i, j, wt(rng));
  }
  return h;
}

}  // namespace oracle
