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

#ifndef SSG_GAME_H_
#define SSG_GAME_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ssg/rational.h"

namespace ssg {

// Payoffs of one target: defender covered/uncovered, attacker
// covered/uncovered. The model requires def_cov > def_unc and
// att_unc > att_cov.
struct TargetPayoffs {
  Rational def_cov;
  Rational def_unc;
  Rational att_cov;
  Rational att_unc;

  friend bool operator==(const TargetPayoffs&, const TargetPayoffs&) = default;
};

using PayoffTable = std::vector<TargetPayoffs>;

// A set of targets one resource can protect, as sorted target indices.
using Schedule = std::vector<int>;

inline constexpr int kUnassigned = -1;

// Security game with scheduling constraints: targets with payoffs, the
// schedule set S, and for each resource the indices of the schedules it may
// take. Immutable once constructed; the constructor validates everything.
class SecurityGame {
 public:
  SecurityGame(PayoffTable payoffs, std::vector<Schedule> schedules,
               std::vector<std::vector<int>> resources);

  // k resources, each allowed every schedule.
  static SecurityGame Homogeneous(PayoffTable payoffs,
                                  std::vector<Schedule> schedules, int k);

  int num_targets() const { return static_cast<int>(payoffs_.size()); }
  int num_schedules() const { return static_cast<int>(schedules_.size()); }
  int num_resources() const { return static_cast<int>(resources_.size()); }

  const PayoffTable& payoffs() const { return payoffs_; }
  const TargetPayoffs& payoffs(int t) const { return payoffs_[t]; }
  const std::vector<Schedule>& schedules() const { return schedules_; }
  const Schedule& schedule(int s) const { return schedules_[s]; }
  const std::vector<std::vector<int>>& resources() const { return resources_; }
  const std::vector<int>& allowed(int r) const { return resources_[r]; }

  // True when every resource may take every schedule.
  bool homogeneous() const;
  // Indices of the schedules that contain t, ascending.
  const std::vector<int>& schedules_covering(int t) const {
    return covering_[t];
  }

  friend bool operator==(const SecurityGame&, const SecurityGame&) = default;

 private:
  PayoffTable payoffs_;
  std::vector<Schedule> schedules_;
  std::vector<std::vector<int>> resources_;
  std::vector<std::vector<int>> covering_;
};

// Pure defender strategy: each resource takes at most one allowed schedule.
// column[t] is 1 iff some assigned schedule covers t.
struct JointSchedule {
  std::vector<int> assignment;
  std::vector<std::uint8_t> column;

  friend bool operator==(const JointSchedule&, const JointSchedule&) = default;
};

// Builds the joint schedule for an assignment; throws InvalidStrategyError
// when a resource is given a schedule outside its allowed set.
JointSchedule MakeJointSchedule(const SecurityGame& game,
                                std::vector<int> assignment);
JointSchedule EmptyJointSchedule(const SecurityGame& game);

struct StrategyEntry {
  JointSchedule schedule;
  Rational probability;
};

// Distribution over joint schedules.
struct MixedStrategy {
  std::vector<StrategyEntry> support;

  static MixedStrategy Pure(JointSchedule js) {
    return MixedStrategy{{StrategyEntry{std::move(js), Rational(1)}}};
  }
};

// Throws InvalidStrategyError unless x is a distribution over joint
// schedules that are feasible for the game.
void ValidateStrategy(const SecurityGame& game, const MixedStrategy& x);

// Marginal coverage probabilities c_t.
struct CoverageVector {
  std::vector<Rational> values;

  int size() const { return static_cast<int>(values.size()); }
  const Rational& operator[](int t) const { return values[t]; }
  friend bool operator==(const CoverageVector&, const CoverageVector&) =
      default;
};

CoverageVector CoverageOf(const SecurityGame& game, const MixedStrategy& x);

Rational AttackerUtility(const SecurityGame& game, const CoverageVector& c,
                         int t);
Rational DefenderUtility(const SecurityGame& game, const CoverageVector& c,
                         int t);
// Expected utilities against a mixed attack a (one probability per target).
Rational AttackerUtility(const SecurityGame& game, const CoverageVector& c,
                         std::span<const Rational> attack);
Rational DefenderUtility(const SecurityGame& game, const CoverageVector& c,
                         std::span<const Rational> attack);

// Targets maximizing the attacker's utility, ascending. Never empty.
std::vector<int> AttackSet(const SecurityGame& game, const CoverageVector& c);

// Defender value when the attacker breaks ties in the defender's favour
// (strong) or against it (weak). Targets resolve residual ties by index.
struct TieBreakValues {
  Rational strong;
  int strong_target = 0;
  Rational weak;
  int weak_target = 0;
};
TieBreakValues ComputeTieBreakValues(const SecurityGame& game,
                                     const CoverageVector& c);
TieBreakValues ComputeTieBreakValues(const SecurityGame& game,
                                     const MixedStrategy& x);

// Same attacker payoffs and covered by the same schedules, which forces
// equal attacker utility under every defender strategy.
bool Identical(const SecurityGame& game, int t, int u);

struct Element {
  std::vector<int> targets;  // ascending
  std::optional<bool> inducible;
};

// Maximal classes of mutually identical targets, ordered by lowest member.
struct ElementPartition {
  std::vector<Element> elements;
  std::vector<int> element_of;  // target -> element id

  int size() const { return static_cast<int>(elements.size()); }
  int representative(int e) const { return elements[e].targets.front(); }
  bool all_singletons() const;
};

ElementPartition ComputeElementPartition(const SecurityGame& game);

// Elements entirely contained in the attack set, ascending by id.
std::vector<int> ElementAttackSet(const ElementPartition& partition,
                                  const std::vector<int>& attack_set);

struct ElementUtilities {
  Rational defender;  // worst member for the defender
  Rational attacker;  // shared by all members
};
ElementUtilities ComputeElementUtilities(const SecurityGame& game,
                                         const CoverageVector& c,
                                         const Element& element);

// "Subsets of schedules are schedules": S and each S_r are closed under
// nonempty subsets (the empty schedule is the unassigned resource).
bool SsasCheck(const SecurityGame& game);

}  // namespace ssg

#endif  // SSG_GAME_H_
