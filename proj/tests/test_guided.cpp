#include "checks.hpp"

#include "twred/io.hpp"
#include "twred/reduce.hpp"
#include "twred/solve.hpp"

#include <doctest.h>

using namespace twred;

namespace {

void require_ok(const checks::Outcome& o) {
  INFO(o.why);
  CHECK(o.ok);
}

}  // namespace

TEST_CASE("guided ternary encoding") {
  std::mt19937 rng(31);
  for (int round = 0; round < 40; ++round) {
    oracle::RandomCnf p;
    p.n = 4;
    p.m = 4;
    p.max_len = 4;
    WeightedCnf phi = oracle::random_wcnf(rng, p);
    TreeDecomposition td = heuristic_td(incidence_graph(phi));
    const int k = width(td);
    ReductionResult r = encode3_guided(phi, td);
    CHECK(r.formula().is_ternary());
    REQUIRE(r.td_incidence);
    require_ok(checks::witnesses_valid(r));
    CHECK(width(*r.td_incidence) <= std::max(k + 1, 2));
    CHECK(r.trace.offset == 0);
    require_ok(checks::sound(phi, r, "encode3"));
  }
}

TEST_CASE("guided encodings of tiny formulas against enumeration") {
  std::mt19937 rng(33);
  int enumerated = 0;
  for (int round = 0; round < 60; ++round) {
    oracle::RandomCnf p;
    p.n = 2;
    p.m = 2;
    p.max_len = 2;
    WeightedCnf phi = oracle::random_wcnf(rng, p);
    TreeDecomposition td = heuristic_td(incidence_graph(phi));
    for (const auto& r : {encode3_guided(phi, td), encode2_guided(phi, td)}) {
      if (r.formula().num_vars > checks::kEnumerateUpTo) continue;
      ++enumerated;
      require_ok(checks::optimum_preserved(phi, r));
    }
  }
  MESSAGE("enumerated " << enumerated);
  CHECK(enumerated > 20);
}

TEST_CASE("guided binary encoding") {
  std::mt19937 rng(32);
  for (int round = 0; round < 40; ++round) {
    oracle::RandomCnf p;
    p.n = 4;
    p.m = 4;
    p.max_len = 3;
    p.hard_prob = 0.3;
    WeightedCnf phi = oracle::random_wcnf(rng, p);
    TreeDecomposition td = heuristic_td(incidence_graph(phi));
    const int k = width(td);
    ReductionResult r = encode2_guided(phi, td);
    CHECK(r.formula().is_binary());
    REQUIRE(r.td_incidence);
    require_ok(checks::witnesses_valid(r));
    CHECK(width(*r.td_incidence) <= std::max({2 * k + 1, k + 2, 3}));
    CHECK(width(*r.td_incidence) <= 3 * k);
    require_ok(checks::sound(phi, r, "encode2"));
  }
}

TEST_CASE("guided pipeline on the intro formula") {
  WeightedCnf phi = parse_wcnf(read_file(TWRED_TEST_DATA "/intro.wcnf")).formula;
  TreeDecomposition td = exact_treewidth(incidence_graph(phi)).td;
  for (Target t : {Target::kTernary, Target::kBinary, Target::kMonotone, Target::kQubo}) {
    ReductionResult r = reduce_to(phi, t, {td, std::nullopt});
    require_ok(checks::witnesses_valid(r));
    require_ok(checks::sound(phi, r, "guided pipeline"));
  }
}

TEST_CASE("guided encoding rejects a decomposition of the wrong graph") {
  WeightedCnf phi = parse_wcnf(read_file(TWRED_TEST_DATA "/intro.wcnf")).formula;
  TreeDecomposition td = heuristic_td(primal_graph(phi));
  CHECK_THROWS(encode3_guided(phi, td));
}
