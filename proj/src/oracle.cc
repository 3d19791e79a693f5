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

#include "ssg/oracle.h"

#include <string>
#include <utility>

#include "ssg/equilibria.h"
#include "ssg/errors.h"
#include "ssg/joint_schedules.h"

namespace ssg::oracle {
namespace {

std::vector<JointSchedule> Columns(const SecurityGame& game,
                                   std::size_t max_points) {
  return EnumerateJointSchedules(game, std::min<std::size_t>(
                                           max_points, kDefaultEnumerationCap));
}

// Visits every x = k / denominator with k a composition of `denominator`
// into one part per column.
template <typename Visit>
void ScanGrid(const SecurityGame& game, const std::vector<JointSchedule>& cols,
              int denominator, std::size_t max_points, const Visit& visit) {
  if (denominator < 1) throw PreconditionError("grid denominator must be >= 1");
  // C(denominator + m - 1, m - 1) points, computed with saturation.
  const std::size_t m = cols.size();
  long double points = 1;
  for (std::size_t i = 1; i < m; ++i) {
    points = points * (denominator + i) / i;
    if (points > static_cast<long double>(max_points)) {
      throw LimitError("grid has more than " + std::to_string(max_points) +
                       " points");
    }
  }
  const int n = game.num_targets();
  std::vector<int> hits(n, 0);  // sum of counts over columns covering t
  CoverageVector c;
  c.values.assign(n, Rational());
  auto recurse = [&](auto&& self, std::size_t j, int left) -> void {
    if (j + 1 == m) {
      for (int t = 0; t < n; ++t) {
        int h = hits[t] + (cols[j].column[t] ? left : 0);
        c.values[t] = Rational(BigInt(h), BigInt(denominator));
      }
      visit(c);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      if (k > 0) {
        for (int t = 0; t < n; ++t) hits[t] += cols[j].column[t];
      }
      self(self, j + 1, left - k);
    }
    for (int t = 0; t < n; ++t) {
      if (cols[j].column[t]) hits[t] -= left;
    }
  };
  recurse(recurse, 0, denominator);
}

}  // namespace

Rational GuaranteeByPerturbation(const SecurityGame& game,
                                 const MixedStrategy& x, const Rational& radius,
                                 int samples) {
  ValidateStrategy(game, x);
  if (radius.sign() < 0) throw PreconditionError("radius must be >= 0");
  if (samples < 1) throw PreconditionError("samples must be >= 1");
  Rational best = ComputeTieBreakValues(game, x).weak;
  if (radius.is_zero()) return best;
  std::vector<JointSchedule> all = Columns(game, kDefaultMaxGridPoints);
  for (std::size_t i = 0; i < x.support.size(); ++i) {
    const Rational& source = x.support[i].probability;
    if (source.is_zero()) continue;
    for (const JointSchedule& sink : all) {
      if (sink == x.support[i].schedule) continue;
      for (int k = 1; k <= samples; ++k) {
        Rational delta = radius * Rational(k) / Rational(samples);
        if (delta > source) break;
        MixedStrategy y = x;
        y.support[i].probability -= delta;
        bool merged = false;
        for (StrategyEntry& e : y.support) {
          if (e.schedule == sink) {
            e.probability += delta;
            merged = true;
          }
        }
        if (!merged) y.support.push_back(StrategyEntry{sink, delta});
        best = Max(best, ComputeTieBreakValues(game, y).weak);
      }
    }
  }
  return best;
}

bool InducibleBrute(const SecurityGame& game, int t, int denominator,
                    std::size_t max_points) {
  if (t < 0 || t >= game.num_targets()) {
    throw ValidationError("target index " + std::to_string(t) +
                          " out of range");
  }
  bool found = false;
  const std::vector<int> want{t};
  ScanGrid(game, Columns(game, max_points), denominator, max_points,
           [&](const CoverageVector& c) {
             if (!found && AttackSet(game, c) == want) found = true;
           });
  return found;
}

std::vector<bool> InducibleElementsBrute(const SecurityGame& game,
                                         int denominator,
                                         std::size_t max_points) {
  ElementPartition p = ComputeElementPartition(game);
  std::vector<bool> flags(p.size(), false);
  ScanGrid(game, Columns(game, max_points), denominator, max_points,
           [&](const CoverageVector& c) {
             std::vector<int> gamma = AttackSet(game, c);
             int e = p.element_of[gamma.front()];
             if (gamma == p.elements[e].targets) flags[e] = true;
           });
  return flags;
}

Rational IseBrute(const SecurityGame& game, int denominator,
                  std::size_t max_points) {
  ElementPartition p = ComputeElementPartition(game);
  std::vector<bool> flags = InducibleElementsBrute(game, denominator, max_points);
  for (int e = 0; e < p.size(); ++e) p.elements[e].inducible = flags[e];
  bool any = false;
  Rational best;
  ScanGrid(game, Columns(game, max_points), denominator, max_points,
           [&](const CoverageVector& c) {
             GuaranteeReport r = UtilityGuarantee(game, c, p);
             if (r.degenerate) return;
             if (!any || r.value > best) best = r.value;
             any = true;
           });
  if (!any) {
    throw PreconditionError("every grid strategy has a degenerate guarantee");
  }
  return best;
}

}  // namespace ssg::oracle
