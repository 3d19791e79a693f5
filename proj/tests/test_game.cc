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

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "ssg/errors.h"
#include "ssg/game.h"
#include "ssg/instances.h"
#include "ssg/joint_schedules.h"
#include "ssg/prng.h"
#include "test_support.h"

using namespace ssg;
using ssg::testing::Example2Strategy;
using ssg::testing::Payoffs;
using ssg::testing::Q;

namespace {

CoverageVector Cov(std::vector<const char*> v) {
  CoverageVector c;
  for (auto* s : v) c.values.push_back(Q(s));
  return c;
}

// Random heterogeneous game in which some targets are planted as exact
// twins of earlier ones (same attacker payoffs, same schedules).
SecurityGame GameWithTwins(SplitMix64& rng) {
  int n = static_cast<int>(rng.UniformInt(3, 7));
  std::vector<int> twin_of(n, -1);
  for (int t = 1; t < n; ++t)
    if (rng.UniformInt(0, 2) == 0) twin_of[t] = static_cast<int>(rng.UniformInt(0, t - 1));
  for (int t = 0; t < n; ++t)
    while (twin_of[t] >= 0 && twin_of[twin_of[t]] >= 0) twin_of[t] = twin_of[twin_of[t]];

  PayoffTable p;
  for (int t = 0; t < n; ++t) {
    int dc = static_cast<int>(rng.UniformInt(1, 5));
    int du = static_cast<int>(rng.UniformInt(-5, 0));
    if (twin_of[t] >= 0) {
      p.push_back({Rational(dc), Rational(du), p[twin_of[t]].att_cov,
                   p[twin_of[t]].att_unc});
    } else {
      p.push_back(Payoffs(dc, du, static_cast<int>(rng.UniformInt(-5, 0)),
                          static_cast<int>(rng.UniformInt(1, 5))));
    }
  }
  int s_count = static_cast<int>(rng.UniformInt(1, 4));
  std::vector<Schedule> schedules;
  for (int s = 0; s < s_count; ++s) {
    Schedule sch;
    for (int t = 0; t < n; ++t) {
      if (twin_of[t] >= 0) continue;
      if (rng.UniformInt(0, 1)) sch.push_back(t);
    }
    if (sch.empty()) {
      int t = static_cast<int>(rng.UniformInt(0, n - 1));
      sch.push_back(twin_of[t] >= 0 ? twin_of[t] : t);
    }
    for (int t = 0; t < n; ++t)
      if (twin_of[t] >= 0 &&
          std::find(sch.begin(), sch.end(), twin_of[t]) != sch.end())
        sch.push_back(t);
    std::sort(sch.begin(), sch.end());
    if (std::find(schedules.begin(), schedules.end(), sch) == schedules.end())
      schedules.push_back(sch);
  }
  int r_count = static_cast<int>(rng.UniformInt(1, 2));
  std::vector<std::vector<int>> resources;
  for (int r = 0; r < r_count; ++r) {
    std::vector<int> allowed;
    for (int s = 0; s < static_cast<int>(schedules.size()); ++s)
      if (rng.UniformInt(0, 3) > 0) allowed.push_back(s);
    if (allowed.empty()) allowed.push_back(0);
    resources.push_back(allowed);
  }
  return SecurityGame(p, schedules, resources);
}

}  // namespace

TEST_CASE("coverage of example strategies") {
  SecurityGame g = Example2Game();
  CHECK(CoverageOf(g, Example2Strategy(g, Q("1/2"))) ==
        Cov({"1/2", "1/2", "1/2", "1/2"}));
  CHECK(CoverageOf(g, Example2Strategy(g, Q("9/14"))) ==
        Cov({"9/14", "9/14", "9/14", "5/14"}));
  CHECK(CoverageOf(g, MixedStrategy::Pure(EmptyJointSchedule(g))) ==
        Cov({"0", "0", "0", "0"}));
}

TEST_CASE("utilities") {
  SecurityGame g = Example2Game();
  auto half = Cov({"1/2", "1/2", "1/2", "1/2"});
  auto ise = Cov({"9/14", "9/14", "9/14", "5/14"});
  CHECK(AttackerUtility(g, half, 1) == 0);
  CHECK(DefenderUtility(g, half, 1) == 50);
  CHECK(AttackerUtility(g, ise, 3) == Q("-2/7"));
  CHECK(DefenderUtility(g, ise, 3) == Q("123/14"));

  // Mixed attack: the weighted sum of pure utilities.
  std::vector<Rational> a{Q("1/4"), Q("0"), Q("0"), Q("3/4")};
  CHECK(DefenderUtility(g, ise, a) ==
        Q("1/4") * DefenderUtility(g, ise, 0) + Q("3/4") * DefenderUtility(g, ise, 3));
  CHECK(AttackerUtility(g, ise, a) ==
        Q("1/4") * AttackerUtility(g, ise, 0) + Q("3/4") * AttackerUtility(g, ise, 3));
}

TEST_CASE("attack sets and tie-break values") {
  SecurityGame g = Example2Game();
  auto half = Cov({"1/2", "1/2", "1/2", "1/2"});
  auto ise = Cov({"9/14", "9/14", "9/14", "5/14"});
  CHECK(AttackSet(g, half) == std::vector<int>{0, 1, 2});
  CHECK(AttackSet(g, ise) == std::vector<int>{0, 3});

  auto tb = ComputeTieBreakValues(g, half);
  CHECK(tb.strong == 50);
  CHECK(tb.strong_target == 1);
  CHECK(tb.weak == 0);
  CHECK(tb.weak_target == 0);

  tb = ComputeTieBreakValues(g, Example2Strategy(g, Q("9/14")));
  CHECK(tb.strong == Q("123/14"));
  CHECK(tb.strong_target == 3);
  CHECK(tb.weak == Q("2/7"));
  CHECK(tb.weak_target == 0);
}

TEST_CASE("identical targets and elements") {
  SecurityGame g = Example2Game();
  for (int t = 0; t < 4; ++t)
    for (int u = 0; u < 4; ++u)
      if (t != u) CHECK_FALSE(Identical(g, t, u));
  auto part = ComputeElementPartition(g);
  CHECK(part.size() == 4);
  CHECK(part.all_singletons());

  // Shared payoffs everywhere, one schedule covering all: a single element.
  SecurityGame same({Payoffs(2, -1, -1, 3), Payoffs(2, -1, -1, 3),
                     Payoffs(2, -1, -1, 3)},
                    {{0, 1, 2}}, {{0}});
  part = ComputeElementPartition(same);
  REQUIRE(part.size() == 1);
  CHECK(part.elements[0].targets == std::vector<int>{0, 1, 2});

  // t1 and t2 twins; t3 has the same payoffs but other schedules.
  SecurityGame twins({Payoffs(3, -1, -2, 4), Payoffs(5, -2, -2, 4),
                      Payoffs(3, -1, -2, 4)},
                     {{0, 1}, {2}}, {{0, 1}});
  CHECK(Identical(twins, 0, 1));
  CHECK_FALSE(Identical(twins, 0, 2));
  part = ComputeElementPartition(twins);
  REQUIRE(part.size() == 2);
  CHECK(part.elements[0].targets == std::vector<int>{0, 1});
  CHECK(part.elements[1].targets == std::vector<int>{2});
  CHECK(part.element_of == std::vector<int>{0, 0, 1});
  CHECK(ElementAttackSet(part, {0, 2}) == std::vector<int>{1});
  CHECK(ElementAttackSet(part, {0, 1, 2}) == std::vector<int>{0, 1});
}

TEST_CASE("element utilities") {
  SecurityGame g = Example2Game();
  auto ise = Cov({"9/14", "9/14", "9/14", "5/14"});
  auto part = ComputeElementPartition(g);
  auto u = ComputeElementUtilities(g, ise, part.elements[3]);
  CHECK(u.defender == Q("123/14"));
  CHECK(u.attacker == Q("-2/7"));

  // Twins with defender utilities 3 and 5 under full coverage.
  SecurityGame twins({Payoffs(3, -1, -2, 4), Payoffs(5, -2, -2, 4)},
                     {{0, 1}}, {{0}});
  part = ComputeElementPartition(twins);
  REQUIRE(part.size() == 1);
  u = ComputeElementUtilities(twins, Cov({"1", "1"}), part.elements[0]);
  CHECK(u.defender == 3);
  CHECK(u.attacker == -2);
}

TEST_CASE("subset closure check") {
  PayoffTable p{Payoffs(1, 0, -1, 1), Payoffs(1, 0, -1, 1), Payoffs(1, 0, -1, 1)};
  CHECK(SsasCheck(SecurityGame::Homogeneous(p, {{0}, {1}, {2}}, 1)));
  CHECK_FALSE(SsasCheck(Example2Game()));
  CHECK(SsasCheck(SecurityGame::Homogeneous({Payoffs(1, 0, -1, 1)}, {{0}}, 1)));
  CHECK(SsasCheck(SecurityGame::Homogeneous(p, {{0, 1}, {0}, {1}, {2}}, 2)));
  // S closed, but one resource's allowed set is not.
  CHECK_FALSE(SsasCheck(SecurityGame(p, {{0, 1}, {0}, {1}}, {{0, 1, 2}, {0}})));
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(SecurityGame({Payoffs(1, 1, -1, 1)}, {{0}}, {{0}}),
                  ValidationError);
  CHECK_THROWS_AS(SecurityGame({Payoffs(1, 0, 1, 1)}, {{0}}, {{0}}),
                  ValidationError);
  CHECK_THROWS_AS(SecurityGame({}, {}, {}), ValidationError);
  CHECK_THROWS_AS(SecurityGame({Payoffs(1, 0, -1, 1)}, {{}}, {{0}}),
                  ValidationError);
  CHECK_THROWS_AS(SecurityGame({Payoffs(1, 0, -1, 1)}, {{1}}, {{0}}),
                  ValidationError);
  CHECK_THROWS_AS(SecurityGame({Payoffs(1, 0, -1, 1)}, {{0}}, {{1}}),
                  ValidationError);
}

TEST_CASE("strategy validation") {
  SecurityGame g = Example2Game();
  CHECK_NOTHROW(ValidateStrategy(g, Example2Strategy(g, Q("1/3"))));
  MixedStrategy x = Example2Strategy(g, Q("1/3"));
  x.support[0].probability = Q("1/2");
  CHECK_THROWS_AS(ValidateStrategy(g, x), InvalidStrategyError);
  x = Example2Strategy(g, Q("1/3"));
  x.support[0].probability = Q("-1/3");
  x.support[1].probability = Q("4/3");
  CHECK_THROWS_AS(ValidateStrategy(g, x), InvalidStrategyError);
  CHECK_THROWS_AS(MakeJointSchedule(g, {2}), InvalidStrategyError);
  CHECK_THROWS_AS(MakeJointSchedule(g, {0, 1}), InvalidStrategyError);
  CHECK_THROWS_AS(CoverageOf(g, MixedStrategy{}), InvalidStrategyError);

  SecurityGame het({Payoffs(1, 0, -1, 1), Payoffs(1, 0, -1, 1)}, {{0}, {1}},
                   {{0}, {1}});
  CHECK_THROWS_AS(MakeJointSchedule(het, {1, kUnassigned}), InvalidStrategyError);
  // Overlap is legal; coverage is an OR.
  SecurityGame overlap = SecurityGame::Homogeneous(
      {Payoffs(1, 0, -1, 1), Payoffs(1, 0, -1, 1)}, {{0, 1}, {1}}, 2);
  auto js = MakeJointSchedule(overlap, {0, 1});
  CHECK(js.column == std::vector<std::uint8_t>{1, 1});
}

TEST_CASE("invariants over random games and strategies") {
  SplitMix64 rng(99);
  int identical_pairs = 0, multi_target_sets = 0;
  for (int game_index = 0; game_index < 60; ++game_index) {
    SecurityGame g = GameWithTwins(rng);
    auto columns = EnumerateJointSchedules(g);
    auto part = ComputeElementPartition(g);
    const int n = g.num_targets();

    // Partition: disjoint cover, identical within, not identical across.
    std::vector<int> seen(n, 0);
    for (int e = 0; e < part.size(); ++e)
      for (int t : part.elements[e].targets) {
        ++seen[t];
        CHECK(part.element_of[t] == e);
      }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; }));
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u)
        CHECK(Identical(g, t, u) == (part.element_of[t] == part.element_of[u]));

    std::vector<CoverageVector> covs;
    for (int k = 0; k < 40; ++k) {
      MixedStrategy x = testing::RandomStrategy(columns, rng);
      Rational total;
      for (auto& e : x.support) total += e.probability;
      CHECK(total == 1);
      CoverageVector c = CoverageOf(g, x);
      covs.push_back(c);
      for (int t = 0; t < n; ++t) CHECK((c[t] >= 0 && c[t] <= 1));

      auto gamma = AttackSet(g, c);
      REQUIRE_FALSE(gamma.empty());
      if (gamma.size() > 1) ++multi_target_sets;
      for (int t : gamma)
        for (int u = 0; u < n; ++u)
          if (!std::binary_search(gamma.begin(), gamma.end(), u))
            CHECK(AttackerUtility(g, c, t) > AttackerUtility(g, c, u));

      auto tb = ComputeTieBreakValues(g, c);
      CHECK(tb.weak <= tb.strong);
      bool constant = true;
      for (int t : gamma)
        constant = constant && DefenderUtility(g, c, t) == DefenderUtility(g, c, gamma[0]);
      CHECK((tb.weak == tb.strong) == constant);

      std::set<int> from_elements;
      for (int e : ElementAttackSet(part, gamma))
        for (int t : part.elements[e].targets) from_elements.insert(t);
      CHECK(std::vector<int>(from_elements.begin(), from_elements.end()) == gamma);
    }

    // Identical targets share attacker utility under many strategies.
    for (int t = 0; t < n; ++t)
      for (int u = t + 1; u < n; ++u) {
        if (!Identical(g, t, u)) continue;
        ++identical_pairs;
        for (int k = 0; k < 1000; ++k) {
          CoverageVector c = CoverageOf(g, testing::RandomStrategy(columns, rng));
          REQUIRE(AttackerUtility(g, c, t) == AttackerUtility(g, c, u));
        }
      }

    // Affinity in coverage.
    for (int k = 0; k + 1 < static_cast<int>(covs.size()); ++k) {
      Rational lambda(BigInt(rng.UniformInt(0, 10)), BigInt(10));
      CoverageVector mix;
      for (int t = 0; t < n; ++t)
        mix.values.push_back(lambda * covs[k][t] + (Rational(1) - lambda) * covs[k + 1][t]);
      for (int t = 0; t < n; ++t) {
        CHECK(DefenderUtility(g, mix, t) ==
              lambda * DefenderUtility(g, covs[k], t) +
                  (Rational(1) - lambda) * DefenderUtility(g, covs[k + 1], t));
        CHECK(AttackerUtility(g, mix, t) ==
              lambda * AttackerUtility(g, covs[k], t) +
                  (Rational(1) - lambda) * AttackerUtility(g, covs[k + 1], t));
      }
    }
  }
  CHECK(identical_pairs > 10);
  CHECK(multi_target_sets > 0);
}
