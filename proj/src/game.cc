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

#include "ssg/game.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "ssg/errors.h"

namespace ssg {
namespace {

std::string TargetName(int t) { return "target " + std::to_string(t); }

}  // namespace

SecurityGame::SecurityGame(PayoffTable payoffs, std::vector<Schedule> schedules,
                           std::vector<std::vector<int>> resources)
    : payoffs_(std::move(payoffs)),
      schedules_(std::move(schedules)),
      resources_(std::move(resources)) {
  const int n = num_targets();
  if (n < 1) throw ValidationError("a game needs at least one target");
  for (int t = 0; t < n; ++t) {
    const TargetPayoffs& p = payoffs_[t];
    if (!(p.def_cov > p.def_unc)) {
      throw ValidationError(TargetName(t) +
                            ": def_cov must exceed def_unc");
    }
    if (!(p.att_unc > p.att_cov)) {
      throw ValidationError(TargetName(t) +
                            ": att_unc must exceed att_cov");
    }
  }
  for (std::size_t s = 0; s < schedules_.size(); ++s) {
    Schedule& sched = schedules_[s];
    if (sched.empty()) {
      throw ValidationError("schedule " + std::to_string(s) + " is empty");
    }
    std::sort(sched.begin(), sched.end());
    for (std::size_t i = 0; i < sched.size(); ++i) {
      if (sched[i] < 0 || sched[i] >= n) {
        throw ValidationError("schedule " + std::to_string(s) +
                              ": target index out of range");
      }
      if (i > 0 && sched[i] == sched[i - 1]) {
        throw ValidationError("schedule " + std::to_string(s) +
                              ": repeated target " + std::to_string(sched[i]));
      }
    }
  }
  for (std::size_t r = 0; r < resources_.size(); ++r) {
    std::vector<int>& allowed = resources_[r];
    std::sort(allowed.begin(), allowed.end());
    for (std::size_t i = 0; i < allowed.size(); ++i) {
      if (allowed[i] < 0 || allowed[i] >= num_schedules()) {
        throw ValidationError("resource " + std::to_string(r) +
                              ": schedule index out of range");
      }
      if (i > 0 && allowed[i] == allowed[i - 1]) {
        throw ValidationError("resource " + std::to_string(r) +
                              ": repeated schedule " +
                              std::to_string(allowed[i]));
      }
    }
  }
  covering_.assign(n, {});
  for (int s = 0; s < num_schedules(); ++s) {
    for (int t : schedules_[s]) covering_[t].push_back(s);
  }
}

SecurityGame SecurityGame::Homogeneous(PayoffTable payoffs,
                                       std::vector<Schedule> schedules,
                                       int k) {
  if (k < 0) throw ValidationError("negative resource count");
  std::vector<int> all(schedules.size());
  for (std::size_t s = 0; s < all.size(); ++s) all[s] = static_cast<int>(s);
  std::vector<std::vector<int>> resources(k, all);
  return SecurityGame(std::move(payoffs), std::move(schedules),
                      std::move(resources));
}

bool SecurityGame::homogeneous() const {
  for (const auto& allowed : resources_) {
    if (static_cast<int>(allowed.size()) != num_schedules()) return false;
  }
  return true;
}

JointSchedule MakeJointSchedule(const SecurityGame& game,
                                std::vector<int> assignment) {
  if (static_cast<int>(assignment.size()) != game.num_resources()) {
    throw InvalidStrategyError("joint schedule has " +
                               std::to_string(assignment.size()) +
                               " entries for " +
                               std::to_string(game.num_resources()) +
                               " resources");
  }
  JointSchedule js;
  js.column.assign(game.num_targets(), 0);
  for (int r = 0; r < game.num_resources(); ++r) {
    int s = assignment[r];
    if (s == kUnassigned) continue;
    const auto& allowed = game.allowed(r);
    if (!std::binary_search(allowed.begin(), allowed.end(), s)) {
      throw InvalidStrategyError("resource " + std::to_string(r) +
                                 " cannot take schedule " + std::to_string(s));
    }
    for (int t : game.schedule(s)) js.column[t] = 1;
  }
  js.assignment = std::move(assignment);
  return js;
}

JointSchedule EmptyJointSchedule(const SecurityGame& game) {
  return MakeJointSchedule(game,
                           std::vector<int>(game.num_resources(), kUnassigned));
}

void ValidateStrategy(const SecurityGame& game, const MixedStrategy& x) {
  if (x.support.empty()) throw InvalidStrategyError("empty strategy");
  Rational total;
  for (const StrategyEntry& e : x.support) {
    if (e.probability.sign() < 0) {
      throw InvalidStrategyError("negative probability");
    }
    JointSchedule rebuilt = MakeJointSchedule(game, e.schedule.assignment);
    if (rebuilt.column != e.schedule.column) {
      throw InvalidStrategyError("coverage column does not match assignment");
    }
    total += e.probability;
  }
  if (total != Rational(1)) {
    throw InvalidStrategyError("probabilities sum to " + total.ToString());
  }
}

CoverageVector CoverageOf(const SecurityGame& game, const MixedStrategy& x) {
  ValidateStrategy(game, x);
  CoverageVector c;
  c.values.assign(game.num_targets(), Rational());
  for (const StrategyEntry& e : x.support) {
    for (int t = 0; t < game.num_targets(); ++t) {
      if (e.schedule.column[t]) c.values[t] += e.probability;
    }
  }
  return c;
}

namespace {

void CheckTarget(const SecurityGame& game, int t) {
  if (t < 0 || t >= game.num_targets()) {
    throw ValidationError("target index " + std::to_string(t) +
                          " out of range");
  }
}

void CheckCoverage(const SecurityGame& game, const CoverageVector& c) {
  if (c.size() != game.num_targets()) {
    throw ValidationError("coverage vector length mismatch");
  }
}

Rational Mix(const Rational& c, const Rational& covered,
             const Rational& uncovered) {
  return uncovered + c * (covered - uncovered);
}

}  // namespace

Rational AttackerUtility(const SecurityGame& game, const CoverageVector& c,
                         int t) {
  CheckTarget(game, t);
  CheckCoverage(game, c);
  const TargetPayoffs& p = game.payoffs(t);
  return Mix(c[t], p.att_cov, p.att_unc);
}

Rational DefenderUtility(const SecurityGame& game, const CoverageVector& c,
                         int t) {
  CheckTarget(game, t);
  CheckCoverage(game, c);
  const TargetPayoffs& p = game.payoffs(t);
  return Mix(c[t], p.def_cov, p.def_unc);
}

Rational AttackerUtility(const SecurityGame& game, const CoverageVector& c,
                         std::span<const Rational> attack) {
  if (static_cast<int>(attack.size()) != game.num_targets()) {
    throw ValidationError("attack vector length mismatch");
  }
  Rational total;
  for (int t = 0; t < game.num_targets(); ++t) {
    if (!attack[t].is_zero()) total += attack[t] * AttackerUtility(game, c, t);
  }
  return total;
}

Rational DefenderUtility(const SecurityGame& game, const CoverageVector& c,
                         std::span<const Rational> attack) {
  if (static_cast<int>(attack.size()) != game.num_targets()) {
    throw ValidationError("attack vector length mismatch");
  }
  Rational total;
  for (int t = 0; t < game.num_targets(); ++t) {
    if (!attack[t].is_zero()) total += attack[t] * DefenderUtility(game, c, t);
  }
  return total;
}

std::vector<int> AttackSet(const SecurityGame& game, const CoverageVector& c) {
  std::vector<int> best;
  Rational best_value;
  for (int t = 0; t < game.num_targets(); ++t) {
    Rational u = AttackerUtility(game, c, t);
    if (best.empty() || u > best_value) {
      best.assign(1, t);
      best_value = std::move(u);
    } else if (u == best_value) {
      best.push_back(t);
    }
  }
  return best;
}

TieBreakValues ComputeTieBreakValues(const SecurityGame& game,
                                     const CoverageVector& c) {
  std::vector<int> gamma = AttackSet(game, c);
  TieBreakValues v;
  bool first = true;
  for (int t : gamma) {
    Rational u = DefenderUtility(game, c, t);
    if (first || u > v.strong) {
      v.strong = u;
      v.strong_target = t;
    }
    if (first || u < v.weak) {
      v.weak = u;
      v.weak_target = t;
    }
    first = false;
  }
  return v;
}

TieBreakValues ComputeTieBreakValues(const SecurityGame& game,
                                     const MixedStrategy& x) {
  return ComputeTieBreakValues(game, CoverageOf(game, x));
}

bool Identical(const SecurityGame& game, int t, int u) {
  CheckTarget(game, t);
  CheckTarget(game, u);
  const TargetPayoffs& a = game.payoffs(t);
  const TargetPayoffs& b = game.payoffs(u);
  return a.att_cov == b.att_cov && a.att_unc == b.att_unc &&
         game.schedules_covering(t) == game.schedules_covering(u);
}

bool ElementPartition::all_singletons() const {
  return static_cast<int>(elements.size()) == static_cast<int>(element_of.size());
}

ElementPartition ComputeElementPartition(const SecurityGame& game) {
  // The identical relation compares a key for equality, so its classes are
  // exactly the groups of equal keys.
  using Key = std::tuple<Rational, Rational, std::vector<int>>;
  std::map<Key, int> index;
  ElementPartition p;
  p.element_of.resize(game.num_targets());
  for (int t = 0; t < game.num_targets(); ++t) {
    const TargetPayoffs& pt = game.payoffs(t);
    Key key{pt.att_cov, pt.att_unc, game.schedules_covering(t)};
    auto [it, inserted] = index.emplace(std::move(key), p.size());
    if (inserted) p.elements.push_back(Element{});
    p.elements[it->second].targets.push_back(t);
    p.element_of[t] = it->second;
  }
  return p;
}

std::vector<int> ElementAttackSet(const ElementPartition& partition,
                                  const std::vector<int>& attack_set) {
  std::vector<int> count(partition.size(), 0);
  for (int t : attack_set) ++count[partition.element_of[t]];
  std::vector<int> out;
  for (int e = 0; e < partition.size(); ++e) {
    if (count[e] == static_cast<int>(partition.elements[e].targets.size())) {
      out.push_back(e);
    }
  }
  return out;
}

ElementUtilities ComputeElementUtilities(const SecurityGame& game,
                                         const CoverageVector& c,
                                         const Element& element) {
  if (element.targets.empty()) throw ValidationError("empty element");
  ElementUtilities u;
  u.attacker = AttackerUtility(game, c, element.targets.front());
  bool first = true;
  for (int t : element.targets) {
    Rational d = DefenderUtility(game, c, t);
    if (first || d < u.defender) u.defender = std::move(d);
    first = false;
  }
  return u;
}

namespace {

// Every nonempty subset of every member is a member. Checking the subsets
// one element smaller suffices by induction on size.
bool SubsetClosed(const std::set<Schedule>& family) {
  for (const Schedule& s : family) {
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Schedule sub;
      sub.reserve(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != drop) sub.push_back(s[i]);
      }
      if (!family.contains(sub)) return false;
    }
  }
  return true;
}

}  // namespace

bool SsasCheck(const SecurityGame& game) {
  std::set<Schedule> all(game.schedules().begin(), game.schedules().end());
  if (!SubsetClosed(all)) return false;
  for (int r = 0; r < game.num_resources(); ++r) {
    std::set<Schedule> own;
    for (int s : game.allowed(r)) own.insert(game.schedule(s));
    if (!SubsetClosed(own)) return false;
  }
  return true;
}

}  // namespace ssg
