#include "oracle.hpp"

#include "twred/count.hpp"
#include "twred/error.hpp"

#include <doctest.h>

using namespace twred;

namespace {

WeightedCnf all_hard(std::mt19937& rng, int n, int m, int max_len) {
  oracle::RandomCnf p;
  p.n = n;
  p.m = m;
  p.max_len = max_len;
  p.hard_prob = 1.0;
  return oracle::random_wcnf(rng, p);
}

std::optional<BigInt> max_weight_oracle(const VarWeightedCnf& vw) {
  std::optional<BigInt> best;
  int n = vw.cnf.num_vars;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    auto x = oracle::values(m, n);
    if (!oracle::cost(vw.cnf, x)) continue;
    BigInt w = 0;
    for (int v = 1; v <= n; ++v)
      if (x[v - 1]) w += vw.var_weight[v - 1];
    if (!best || w > *best) best = w;
  }
  return best;
}

VarWeightedCnf random_vw(std::mt19937& rng, int n, int max_weight) {
  VarWeightedCnf vw;
  vw.cnf = all_hard(rng, n, n, 3);
  std::uniform_int_distribution<int> wt(0, max_weight);
  for (int v = 1; v <= n; ++v) vw.var_weight.push_back(wt(rng));
  return vw;
}

}  // namespace

TEST_CASE("model count agrees with enumeration") {
  std::mt19937 rng(51);
  for (int round = 0; round < 40; ++round) {
    WeightedCnf psi = all_hard(rng, 10, 12, 3);
    CHECK(model_count(psi) == oracle::count_models(psi));
    CHECK(dp_count(psi, heuristic_td(primal_graph(psi), Heuristic::kMinDegree, 3)) ==
          oracle::count_models(psi));
  }
  WeightedCnf empty;
  empty.num_vars = 5;
  CHECK(model_count(empty) == 32);
}

TEST_CASE("counting rejects soft clauses") {
  WeightedCnf phi;
  phi.num_vars = 1;
  phi.add({Literal::pos(1)}, 2);
  CHECK_THROWS_AS(model_count(phi), PreconditionError);
}

TEST_CASE("variable weighting moves soft weight onto fresh variables") {
  std::mt19937 rng(52);
  for (int round = 0; round < 30; ++round) {
    oracle::RandomCnf p;
    p.n = 5;
    p.m = 5;
    WeightedCnf phi = oracle::random_wcnf(rng, p);
    VarWeightedResult r = to_var_weighted(phi);
    CHECK(r.vw.cnf.all_hard());
    auto ref = oracle::optimum(phi).value;
    auto mw = max_weight_oracle(r.vw);
    CHECK(ref.has_value() == mw.has_value());
    if (ref) CHECK(r.total_soft_weight - *mw == *ref);
  }
}

TEST_CASE("unary elimination keeps the maximum weight") {
  std::mt19937 rng(53);
  for (int round = 0; round < 30; ++round) {
    VarWeightedCnf vw = random_vw(rng, 5, 3);
    VarWeightedStep s = elim_unary(vw, heuristic_td(incidence_graph(vw.cnf)));
    for (const auto& w : s.vw.var_weight) CHECK(w <= 1);
    CHECK(max_weight_oracle(s.vw) == max_weight_oracle(vw));
    REQUIRE(s.td_incidence);
    CHECK(validate(incidence_graph(s.vw.cnf), *s.td_incidence).ok());
  }
}

TEST_CASE("weight-one encoding counts 2^(m w) per model") {
  std::mt19937 rng(54);
  for (int round = 0; round < 30; ++round) {
    VarWeightedCnf vw = random_vw(rng, 4, 1);
    CountEncoding e = encode_weight_one(vw, std::nullopt, heuristic_td(incidence_graph(vw.cnf)));
    CHECK(e.multiplier_bits == 5);
    BigInt expect = 0;
    for (std::uint64_t m = 0; m < 16; ++m) {
      auto x = oracle::values(m, 4);
      if (!oracle::cost(vw.cnf, x)) continue;
      int w = 0;
      for (int v = 1; v <= 4; ++v) w += x[v - 1] && vw.var_weight[v - 1] == 1;
      expect += BigInt(1) << (5 * w);
    }
    CHECK(model_count(e.cnf) == expect);
    REQUIRE(e.td_incidence);
    CHECK(validate(incidence_graph(e.cnf), *e.td_incidence).ok());
  }
}

TEST_CASE("weight-one encoding of (x or y) with w(x) = 1 counts 17") {
  VarWeightedCnf vw;
  vw.cnf.num_vars = 2;
  vw.cnf.add({Literal::pos(1), Literal::pos(2)}, Weight::infinity());
  vw.var_weight = {1, 0};
  CountEncoding e = encode_weight_one(vw, 3);
  CHECK(model_count(e.cnf) == 17);
  CHECK(max_weight_from_count(17, 3) == BigInt(1));
}

TEST_CASE("max weight from count") {
  CHECK_FALSE(max_weight_from_count(0, 3).has_value());
  CHECK(max_weight_from_count(1, 3) == BigInt(0));
  CHECK(max_weight_from_count(7, 3) == BigInt(0));
  CHECK(max_weight_from_count(8, 3) == BigInt(1));
  CHECK(max_weight_from_count(BigInt(1) << 300, 3) == BigInt(100));
}

TEST_CASE("unary MaxSAT by counting") {
  std::mt19937 rng(55);
  for (int round = 0; round < 25; ++round) {
    oracle::RandomCnf p;
    p.n = 4;
    p.m = 5;
    p.max_weight = 2;
    WeightedCnf phi = oracle::random_wcnf(rng, p);
    Optimum o = solve_unary(phi);
    auto ref = oracle::optimum(phi).value;
    if (!ref) {
      CHECK(o.value.is_infinite());
      continue;
    }
    CHECK(o.value == Weight(*ref));
    CHECK(cost(phi, o.witness) == o.value);
  }
}

TEST_CASE("multiplicative weights") {
  VarWeightedCnf one;
  one.cnf.num_vars = 1;
  one.cnf.add({Literal::pos(1)}, Weight::infinity());
  one.var_weight = {2};
  MaxWeightOptimum r = solve_mult(one);
  CHECK(r.satisfiable);
  CHECK(r.max_weight == 2);

  std::mt19937 rng(56);
  for (int round = 0; round < 25; ++round) {
    VarWeightedCnf vw = random_vw(rng, 4, 3);
    MaxWeightOptimum m = solve_mult(vw);
    auto ref = max_weight_oracle(vw);
    CHECK(m.satisfiable == ref.has_value());
    if (!ref) continue;
    CHECK(m.max_weight == *ref);
    CHECK(cost(vw.cnf, m.witness).is_finite());
    CHECK(vw.weight_of(m.witness) == *ref);
  }
}

TEST_CASE("lexicographic MaxSAT") {
  std::mt19937 rng(57);
  for (int round = 0; round < 25; ++round) {
    WeightedCnf psi = all_hard(rng, 5, 5, 3);
    std::map<Var, int> rank{{1, 2}, {2, 2}, {3, 1}, {4, 0}};
    auto profile = [&](const std::vector<bool>& x) {
      std::vector<int> c(3, 0);
      for (auto [v, r] : rank)
        if (x[v - 1]) ++c[2 - r];
      return c;
    };
    std::optional<std::vector<int>> best;
    for (std::uint64_t m = 0; m < 32; ++m) {
      auto x = oracle::values(m, 5);
      if (!oracle::cost(psi, x)) continue;
      auto p = profile(x);
      if (!best || p > *best) best = p;
    }
    MaxWeightOptimum r = solve_lex(psi, rank);
    CHECK(r.satisfiable == best.has_value());
    if (!best) continue;
    CHECK(cost(psi, r.witness).is_finite());
    CHECK(profile(r.witness.values()) == *best);
  }
}
