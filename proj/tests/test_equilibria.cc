// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <map>
#include <vector>

#include "doctest.h"
#include "ssg/equilibria.h"
#include "ssg/errors.h"
#include "ssg/instances.h"
#include "test_support.h"

using namespace ssg;
using ssg::testing::Example2Strategy;
using ssg::testing::Payoffs;
using ssg::testing::Q;

namespace {

std::map<std::vector<int>, Rational> AsMap(const MixedStrategy& x) {
  std::map<std::vector<int>, Rational> m;
  for (auto& e : x.support)
    if (!e.probability.is_zero()) m[e.schedule.assignment] += e.probability;
  return m;
}

std::map<std::vector<int>, Rational> Example2Map(const char* x1, const char* x2) {
  return {{{0}, Q(x1)}, {{1}, Q(x2)}};
}

SolveOptions Cg() {
  SolveOptions o;
  o.strategy_space.mode = StrategySpaceMode::kColumnGeneration;
  return o;
}

SolveOptions Enumerate() {
  SolveOptions o;
  o.strategy_space.mode = StrategySpaceMode::kEnumerate;
  return o;
}

}  // namespace

TEST_CASE("example2 fixture: strong Stackelberg equilibrium") {
  SecurityGame g = Example2Game();
  for (const SolveOptions& o : {Enumerate(), Cg()}) {
    EquilibriumResult r = Sse(g, o);
    CHECK(r.solution_concept == SolutionConcept::kSse);
    CHECK(AsMap(r.strategy) == Example2Map("1/2", "1/2"));
    CHECK(r.attacked_target == 1);
    CHECK(r.optimistic_value == 50);
    CHECK(r.guarantee.value == 0);
    CHECK(r.guarantee.witness_element == 0);
    CHECK_FALSE(r.guarantee.degenerate);
    CHECK(r.guarantee.value <= r.optimistic_value);
  }
}

TEST_CASE("example2 fixture: inducible Stackelberg equilibrium") {
  SecurityGame g = Example2Game();
  for (const SolveOptions& o : {Enumerate(), Cg()}) {
    EquilibriumResult r = Ise(g, o);
    CHECK(r.solution_concept == SolutionConcept::kIse);
    CHECK(AsMap(r.strategy) == Example2Map("9/14", "5/14"));
    CHECK(r.attacked_target == 3);
    CHECK(r.attacked_element == 3);
    CHECK(r.guarantee.value == Q("123/14"));
    CHECK(r.guarantee.witness_element == 3);
  }
  EquilibriumResult restricted = IseViaRestrictedGame(g);
  CHECK(restricted.guarantee.value == Q("123/14"));
  CHECK(AsMap(restricted.strategy) == Example2Map("9/14", "5/14"));
}

TEST_CASE("example2 fixture: inducibility and feasibility") {
  SecurityGame g = Example2Game();
  const bool expected[] = {true, false, true, true};
  for (const SolveOptions& o : {Enumerate(), Cg()}) {
    auto part = InducibleElements(g, o);
    for (int e = 0; e < 4; ++e) CHECK(part.elements[e].inducible == expected[e]);
    for (int t = 0; t < 4; ++t) {
      auto ind = InducibleTarget(g, t, o);
      CHECK(ind.inducible == expected[t]);
      if (ind.inducible) {
        REQUIRE(ind.witness.has_value());
        CHECK(AttackSet(g, CoverageOf(g, *ind.witness)) == std::vector<int>{t});
      } else {
        CHECK_FALSE(ind.witness.has_value());
      }
      CHECK(FeasibleTarget(g, t, o));
    }
    // t4 beats t1 only while x2 < 5/14.
    auto t4 = InducibleTarget(g, 3, o);
    CHECK(CoverageOf(g, *t4.witness)[3] < Q("5/14"));
  }
  for (int t = 0; t < 4; ++t) CHECK(FeasibleTargetViaSse(g, t));
}

TEST_CASE("example2 fixture: guarantees and comparisons") {
  SecurityGame g = Example2Game();
  auto part = InducibleElements(g);
  auto half = UtilityGuarantee(g, Example2Strategy(g, Q("1/2")), part);
  CHECK(half.value == 0);
  CHECK(half.witness_element == 0);
  auto ise = UtilityGuarantee(g, Example2Strategy(g, Q("9/14")));
  CHECK(ise.value == Q("123/14"));
  CHECK(ise.witness_element == 3);

  auto a = AssessSse(g);
  CHECK(a.overoptimistic);
  CHECK(a.suboptimal);
  CHECK(SseOveroptimistic(g));
  CHECK(SseSuboptimal(g));
}

TEST_CASE("degenerate guarantee falls back to the weak value") {
  SecurityGame g = Example2Game();
  auto part = ComputeElementPartition(g);
  for (auto& e : part.elements) e.inducible = false;
  part.elements[3].inducible = true;
  // Attack set {t1,t2,t3}; none of them flagged inducible.
  auto c = CoverageOf(g, Example2Strategy(g, Q("1/2")));
  auto rep = UtilityGuarantee(g, c, part);
  CHECK(rep.degenerate);
  CHECK_FALSE(rep.witness_element.has_value());
  CHECK(rep.value == ComputeTieBreakValues(g, c).weak);
}

TEST_CASE("single target") {
  SecurityGame g = SecurityGame::Homogeneous({Payoffs(7, -2, -1, 3)}, {{0}}, 1);
  auto sse = Sse(g);
  CHECK(sse.optimistic_value == 7);
  CHECK(sse.attacked_target == 0);
  CHECK(Ise(g).guarantee.value == 7);
  CHECK(InducibleTarget(g, 0).inducible);
  CHECK(FeasibleTarget(g, 0));

  // No resource: the only strategy leaves the target uncovered.
  SecurityGame bare = SecurityGame::Homogeneous({Payoffs(7, -2, -1, 3)}, {{0}}, 0);
  CHECK(Sse(bare).optimistic_value == -2);
  CHECK(Ise(bare).guarantee.value == -2);
}

TEST_CASE("schedules spanning every target") {
  // l = n: every column covers all targets or none. SSE and ISE agree
  // whenever the SSE target is an inducible singleton element.
  GeneratorConfig cfg;
  cfg.n = 6;
  cfg.num_schedules = 3;
  cfg.l = 6;
  int agreeing = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    cfg.seed = seed;
    SecurityGame g = RandomGame(cfg);
    auto a = AssessSse(g);
    CHECK(a.ise.guarantee.value <= a.sse.optimistic_value);
    const Element& e = a.partition.elements[a.partition.element_of[a.sse.attacked_target]];
    if (e.targets.size() == 1 && *e.inducible) {
      CHECK(a.sse.optimistic_value == a.ise.guarantee.value);
      ++agreeing;
    }
  }
  CHECK(agreeing > 10);
}

TEST_CASE("a target that ties only at full coverage") {
  // Attacker lines 1 - 2c and 5 - 6c meet at c = 1 only, so t1 is never
  // strictly preferred: SSE scores 5 there, ISE can only secure t2's 1.
  SecurityGame g = SecurityGame::Homogeneous(
      {Payoffs(5, 0, -1, 1), Payoffs(1, 0, -1, 5)}, {{0, 1}}, 1);
  auto a = AssessSse(g);
  CHECK(a.sse.optimistic_value == 5);
  CHECK(a.sse.attacked_target == 0);
  CHECK_FALSE(*a.partition.elements[0].inducible);
  CHECK(*a.partition.elements[1].inducible);
  CHECK(a.ise.guarantee.value == 1);
  CHECK(a.overoptimistic);
}

TEST_CASE("a game without inducible elements") {
  // t1 and t2 share the attacker's top reward and no resource may cover
  // them, so neither is ever alone in the attack set.
  SecurityGame g({Payoffs(1, -1, -4, 4), Payoffs(2, -3, -5, 4), Payoffs(3, 0, -1, 3)},
                 {{0, 1}, {2}}, {{1}});
  CHECK_FALSE(Identical(g, 0, 1));
  auto part = InducibleElements(g);
  for (auto& e : part.elements) CHECK_FALSE(*e.inducible);
  CHECK_THROWS_AS(Ise(g), InternalInvariantError);
  auto sse = Sse(g);
  // Both stay uncovered: strong value -1, weak value -3.
  CHECK(sse.optimistic_value == -1);
  CHECK(sse.guarantee.degenerate);
  CHECK(sse.guarantee.value == -3);
}

TEST_CASE("identical targets form elements") {
  // t1, t2 twins (covered together); t3 separate.
  SecurityGame g = SecurityGame::Homogeneous(
      {Payoffs(3, -4, -2, 4), Payoffs(5, -1, -2, 4), Payoffs(2, -3, -1, 2)},
      {{0, 1}, {2}}, 1);
  auto part = InducibleElements(g);
  REQUIRE(part.size() == 2);
  CHECK(part.elements[0].targets == std::vector<int>{0, 1});
  StrategySpace space(g);
  for (int e = 0; e < part.size(); ++e) {
    if (!*part.elements[e].inducible) continue;
    auto w = InducibleElement(space, part, e);
    REQUIRE(w.witness.has_value());
    CHECK(AttackSet(g, CoverageOf(g, *w.witness)) == part.elements[e].targets);
  }
  auto ise = Ise(g);
  REQUIRE(*part.elements[ise.attacked_element].inducible);
  auto c = ise.coverage;
  // Attacked target is the worst member of its element for the defender.
  for (int t : part.elements[ise.attacked_element].targets)
    CHECK(DefenderUtility(g, c, ise.attacked_target) <= DefenderUtility(g, c, t));
  CHECK_THROWS_AS(IseViaRestrictedGame(g), PreconditionError);
  CHECK_THROWS_AS(InducibilityViaReduction(g, 0), PreconditionError);
}

TEST_CASE("bounds") {
  CHECK(M2Bound(1, BigInt(1)) == 4);
  CHECK(M2Bound(2, BigInt(5)) == 960000);
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 80, 16);
  CHECK(M2Bound(4, BigInt(5)) == 2 * 5 * p);
  CHECK(M1Bound(2, BigInt(5)) == 400);
  CHECK(M1Bound(1, BigInt(3)) == 3);
  CHECK(PayoffMagnitude(Example2Game()) == 100);
}

TEST_CASE("reduction") {
  SecurityGame g = Example2Game();
  SecurityGame h = ReductionGame(g, 3);
  BigInt m2 = M2Bound(4, BigInt(100));
  Rational k(BigInt(5 * m2 * m2));
  for (int t = 0; t < 4; ++t) {
    CHECK(h.payoffs(t).def_cov == g.payoffs(t).def_cov);
    CHECK(h.payoffs(t).def_unc == g.payoffs(t).def_unc);
    Rational shift = t == 3 ? Rational(1) : Rational(0);
    CHECK(h.payoffs(t).att_cov == k * g.payoffs(t).att_cov - shift);
    CHECK(h.payoffs(t).att_unc == k * g.payoffs(t).att_unc - shift);
  }
  CHECK(h.schedules() == g.schedules());
  for (int t = 0; t < 4; ++t)
    CHECK(InducibilityViaReduction(g, t) == InducibleTarget(g, t).inducible);
}

TEST_CASE("reduction guards") {
  SecurityGame frac = SecurityGame::Homogeneous(
      {Payoffs(1, 0, -1, 1), {Q("3/2"), Q("0"), Q("-1"), Q("2")}}, {{0}, {1}}, 1);
  CHECK_THROWS_AS(ReductionGame(frac, 0), PreconditionError);
  ReductionOptions tight;
  tight.digit_budget = 20;
  CHECK_THROWS_AS(InducibilityViaReduction(Example2Game(), 0, tight), LimitError);
  CHECK_THROWS_AS(ReductionGame(Example2Game(), 4), ValidationError);
}

TEST_CASE("target index errors") {
  SecurityGame g = Example2Game();
  CHECK_THROWS_AS(InducibleTarget(g, 4), ValidationError);
  CHECK_THROWS_AS(InducibleTarget(g, -1), ValidationError);
  CHECK_THROWS_AS(FeasibleTarget(g, 9), ValidationError);
}

TEST_CASE("results do not depend on the number of jobs") {
  GeneratorConfig cfg;
  cfg.n = 12;
  cfg.num_schedules = 6;
  cfg.l = 4;
  cfg.resources = 2;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    cfg.seed = seed;
    SecurityGame g = RandomGame(cfg);
    SolveOptions one, four;
    four.jobs = 4;
    auto a = AssessSse(g, one);
    auto b = AssessSse(g, four);
    CHECK(AsMap(a.sse.strategy) == AsMap(b.sse.strategy));
    CHECK(AsMap(a.ise.strategy) == AsMap(b.ise.strategy));
    CHECK(a.sse.attacked_target == b.sse.attacked_target);
    CHECK(a.ise.attacked_target == b.ise.attacked_target);
    CHECK(a.ise.guarantee.value == b.ise.guarantee.value);
    for (int e = 0; e < a.partition.size(); ++e)
      CHECK(a.partition.elements[e].inducible == b.partition.elements[e].inducible);
  }
}
