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

#ifndef SSG_JOINT_SCHEDULES_H_
#define SSG_JOINT_SCHEDULES_H_

#include <cstddef>
#include <vector>

#include "ssg/game.h"
#include "ssg/rational.h"

namespace ssg {

inline constexpr std::size_t kDefaultEnumerationCap = 10000;

// All feasible joint schedules with distinct coverage columns, including the
// empty one. Each column is represented by its lexicographically smallest
// assignment (unassigned sorts first), and columns are returned in that
// assignment order. Throws LimitError once more than `cap` distinct columns
// appear.
std::vector<JointSchedule> EnumerateJointSchedules(
    const SecurityGame& game, std::size_t cap = kDefaultEnumerationCap);

// Upper bound on the number of joint schedules the enumeration visits,
// saturating at `limit`. Cheap; used to choose between enumeration and
// column generation.
std::size_t JointScheduleCountBound(const SecurityGame& game,
                                    std::size_t limit);

struct PricingResult {
  JointSchedule schedule;
  Rational value;         // sum of weights over covered targets
  Rational reduced_cost;  // value - scalar
};

// Exact maximizer of sum_t weights[t] * column[t] over feasible joint
// schedules, by depth-first branch and bound over resources. Among optimal
// schedules the lexicographically smallest assignment is returned.
PricingResult PriceJointSchedule(const SecurityGame& game,
                                 const std::vector<Rational>& weights,
                                 const Rational& scalar);

// PriceJointSchedule's result followed by up to `extra` further columns
// with positive reduced cost, taken from the assignments that differ from
// the optimum in one resource (best reduced cost first, ties by assignment,
// distinct coverage columns).
std::vector<PricingResult> PriceJointSchedules(
    const SecurityGame& game, const std::vector<Rational>& weights,
    const Rational& scalar, int extra);

// One joint schedule per target that covers it: the first resource able to
// take a covering schedule takes the largest one (ties by index), then each
// remaining resource greedily takes the schedule adding the most newly
// covered targets. Targets no resource can cover are skipped. Duplicate
// columns are removed.
std::vector<JointSchedule> GreedyCoveringColumns(const SecurityGame& game);

}  // namespace ssg

#endif  // SSG_JOINT_SCHEDULES_H_
