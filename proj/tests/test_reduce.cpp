#include "checks.hpp"

#include "twred/error.hpp"
#include "twred/io.hpp"
#include "twred/reduce.hpp"

#include <doctest.h>

using namespace twred;

namespace {

WeightedCnf intro() { return parse_wcnf(read_file(TWRED_TEST_DATA "/intro.wcnf")).formula; }

Witness primal_witness(const WeightedCnf& phi) { return {heuristic_td(primal_graph(phi)), std::nullopt}; }

Witness both_witnesses(const WeightedCnf& phi) {
  return {heuristic_td(primal_graph(phi)), heuristic_td(incidence_graph(phi))};
}

void require_ok(const checks::Outcome& o) {
  INFO(o.why);
  CHECK(o.ok);
}

// Random formula whose clauses of length three are hard, softened by Rule 4.
WeightedCnf rule5_input(std::mt19937& rng, BigInt& h) {
  oracle::RandomCnf p;
  p.n = 4;
  p.m = 4;
  WeightedCnf phi = oracle::random_wcnf(rng, p);
  for (auto& c : phi.clauses)
    if (c.size() == 3) c.weight = Weight::infinity();
  ReductionResult r = rule4_soften(phi);
  h = r.trace.h->value();
  return r.formula();
}

}  // namespace

TEST_CASE("intro formula has optimum 5") {
  auto o = oracle::optimum(intro());
  REQUIRE(o.value);
  CHECK(*o.value == 5);
}

TEST_CASE("rule 1 drops zero clauses without changing any cost") {
  std::mt19937 rng(1);
  for (int round = 0; round < 30; ++round) {
    oracle::RandomCnf p;
    p.allow_zero = true;
    WeightedCnf phi = oracle::random_wcnf(rng, p);
    ReductionResult r = rule1_drop_zero(phi, both_witnesses(phi));
    for (const auto& c : r.formula().clauses) CHECK_FALSE(c.weight.is_zero());
    for (std::uint64_t m = 0; m < (1U << phi.num_vars); ++m)
      CHECK(cost(phi, oracle::assignment(m, phi.num_vars)) ==
            cost(r.formula(), oracle::assignment(m, phi.num_vars)));
    require_ok(checks::witnesses_valid(r));
    CHECK(rule1_drop_zero(r.formula()).formula() == r.formula());
  }
}

TEST_CASE("rule 2 leaves only unit soft clauses") {
  std::mt19937 rng(2);
  for (int round = 0; round < 30; ++round) {
    WeightedCnf phi = oracle::random_wcnf(rng, {});
    ReductionResult r = rule2_unit_soft(phi, both_witnesses(phi));
    for (const auto& c : r.formula().clauses) CHECK((c.is_hard() || c.size() <= 1));
    require_ok(checks::optimum_preserved(phi, r));
    require_ok(checks::witnesses_valid(r));
  }
}

TEST_CASE("rule 3 splits long hard clauses") {
  std::mt19937 rng(3);
  for (int round = 0; round < 30; ++round) {
    oracle::RandomCnf p;
    p.n = 7;
    p.m = 5;
    p.max_len = 6;
    p.hard_prob = 0.6;
    WeightedCnf phi = oracle::random_wcnf(rng, p);
    ReductionResult r = rule3_split3(phi, primal_witness(phi));
    for (const auto& c : r.formula().clauses) CHECK((c.is_soft() || c.size() <= 3));
    CHECK(r.formula().num_vars <= 18);
    require_ok(checks::optimum_preserved(phi, r));
    require_ok(checks::witnesses_valid(r));
  }
}

TEST_CASE("rule 4 on the intro formula") {
  ReductionResult r = rule4_soften(intro());
  CHECK(r.trace.h == Weight(228));
  CHECK(r.trace.theta == Weight(456));
  CHECK_FALSE(r.formula().has_hard());
  require_ok(checks::optimum_preserved(intro(), r));
}

TEST_CASE("rule 4 signals unsatisfiable inputs") {
  std::mt19937 rng(4);
  int unsat = 0;
  for (int round = 0; round < 60; ++round) {
    oracle::RandomCnf p;
    p.n = 3;
    p.m = 7;
    p.hard_prob = 0.6;
    WeightedCnf phi = oracle::random_wcnf(rng, p);
    ReductionResult r = rule4_soften(phi, both_witnesses(phi));
    unsat += oracle::optimum(phi).value ? 0 : 1;
    require_ok(checks::optimum_preserved(phi, r));
  }
  CHECK(unsat > 0);
}

TEST_CASE("rule 5 produces a binary formula") {
  std::mt19937 rng(5);
  for (int round = 0; round < 30; ++round) {
    BigInt h;
    WeightedCnf phi = rule5_input(rng, h);
    ReductionResult r = rule5_to2(phi, h, primal_witness(phi));
    CHECK(r.formula().is_binary());
    require_ok(checks::optimum_preserved(phi, r));
    require_ok(checks::witnesses_valid(r));
  }
}

TEST_CASE("rule 5 rejects ternary clauses of the wrong weight") {
  WeightedCnf phi;
  phi.num_vars = 3;
  phi.add({Literal::pos(1), Literal::pos(2), Literal::pos(3)}, 4);
  CHECK_THROWS_AS(rule5_to2(phi, 5), PreconditionError);
}

TEST_CASE("rule 6 removes positive literals") {
  std::mt19937 rng(6);
  for (int round = 0; round < 30; ++round) {
    oracle::RandomCnf p;
    p.n = 5;
    p.m = 5;
    p.max_len = 2;
    p.hard_prob = 0;
    WeightedCnf phi = oracle::random_wcnf(rng, p);
    const BigInt h = 6;
    ReductionResult r = rule6_monotone(phi, h, both_witnesses(phi));
    CHECK(r.formula().is_monotone());
    CHECK(r.formula().is_binary());
    require_ok(checks::optimum_preserved(phi, r));
    require_ok(checks::witnesses_valid(r));
    CHECK(rule6_monotone(r.formula(), h).formula() == r.formula());
  }
}

TEST_CASE("rule 7 keeps every cost") {
  std::mt19937 rng(7);
  for (int round = 0; round < 30; ++round) {
    oracle::RandomCnf p;
    p.n = 5;
    p.m = 6;
    p.max_len = 2;
    p.hard_prob = 0;
    WeightedCnf phi = oracle::random_wcnf(rng, p);
    for (auto& c : phi.clauses)
      for (auto& l : c.literals) l.negative = true;
    phi.clauses[0].weight = Weight(-3);
    ReductionResult r = rule7_to_qubo(phi, both_witnesses(phi));
    for (std::uint64_t m = 0; m < 32; ++m)
      CHECK(Weight(evaluate(r.hamiltonian(), oracle::assignment(m, 5))) ==
            cost(phi, oracle::assignment(m, 5)));
    require_ok(checks::witnesses_valid(r));
  }
}

TEST_CASE("rule 7 folds empty clauses into the offset") {
  WeightedCnf phi;
  phi.num_vars = 1;
  phi.add({}, 4);
  phi.add({Literal::neg(1)}, 2);
  ReductionResult r = rule7_to_qubo(phi);
  CHECK(r.trace.offset == -4);
  require_ok(checks::optimum_preserved(phi, r));
}

TEST_CASE("rule 8 turns a hamiltonian into MaxSAT") {
  std::mt19937 rng(8);
  for (int round = 0; round < 30; ++round) {
    Hamiltonian h = oracle::random_qubo(rng, 6, 0.5, 7);
    Witness w{heuristic_td(primal_graph(h)), heuristic_td(incidence_graph(h))};
    ReductionResult r = rule8_qubo_to_maxsat(h, w);
    auto g = oracle::ground(h);
    auto o = oracle::optimum(r.formula());
    REQUIRE(o.value);
    CHECK(*o.value - r.trace.offset == g.value);
    for (auto m : o.optima) {
      auto back = r.trace.map_back(oracle::assignment(m, r.formula().num_vars));
      CHECK(oracle::energy(h, back.values()) == g.value);
    }
    require_ok(checks::witnesses_valid(r));
  }
}

TEST_CASE("rules are the identity when they do not apply") {
  WeightedCnf phi;
  phi.num_vars = 2;
  phi.add({Literal::neg(1), Literal::neg(2)}, 3);
  phi.add({Literal::neg(2)}, 1);
  CHECK(rule1_drop_zero(phi).formula() == phi);
  CHECK(rule2_unit_soft(phi).formula().num_vars == 3);
  CHECK(rule3_split3(phi).formula() == phi);
  CHECK(rule4_soften(phi).formula() == phi);
  CHECK(rule5_to2(phi, 5).formula() == phi);
  CHECK(rule6_monotone(phi, 5).formula() == phi);
}

TEST_CASE("unguided pipeline reaches each target") {
  std::mt19937 rng(9);
  for (int round = 0; round < 25; ++round) {
    oracle::RandomCnf p;
    p.n = 5;
    p.m = 5;
    p.max_len = 3;
    p.hard_prob = 0.4;
    WeightedCnf phi = oracle::random_wcnf(rng, p);
    for (Target t : {Target::kTernary, Target::kBinary, Target::kMonotone, Target::kQubo}) {
      ReductionResult r = reduce_to(phi, t);
      if (r.is_formula()) {
        CHECK(r.formula().is_ternary());
        if (t != Target::kTernary) CHECK(r.formula().is_binary());
        if (t == Target::kMonotone) CHECK(r.formula().is_monotone());
      } else {
        CHECK(t == Target::kQubo);
      }
      require_ok(checks::sound(phi, r, "pipeline"));
      require_ok(checks::witnesses_valid(r));
    }
  }
}

TEST_CASE("pipeline on the intro formula") {
  ReductionResult r = pipeline_maxsat_to_qubo(intro());
  REQUIRE_FALSE(r.is_formula());
  require_ok(checks::sound(intro(), r, "pipeline"));
  REQUIRE(r.td_primal);
  CHECK(width(*r.td_primal) <= 4);
}

TEST_CASE("trace composition adds offsets and maps through both steps") {
  ReductionTrace a = ReductionTrace::identity(2);
  a.output_vars = 3;
  a.offset = 5;
  a.back_map = {2, 3};
  ReductionTrace b = ReductionTrace::identity(3);
  b.output_vars = 4;
  b.offset = -2;
  b.back_map = {4, 1, 2};
  ReductionTrace c = compose(a, b);
  CHECK(c.offset == 3);
  CHECK(c.back_map == std::vector<Var>{1, 2});
  CHECK_THROWS_AS(c.map_back(Assignment(3)), DomainError);
}
