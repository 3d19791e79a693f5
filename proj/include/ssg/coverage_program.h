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

#ifndef SSG_COVERAGE_PROGRAM_H_
#define SSG_COVERAGE_PROGRAM_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ssg/game.h"
#include "ssg/joint_schedules.h"
#include "ssg/lp.h"
#include "ssg/rational.h"

namespace ssg {

// A linear program over mixed strategies written in terms of coverage:
// variables are the joint-schedule probabilities x_j (summing to 1) and an
// optional free "gap" variable u. A term {t, a} stands for a * c_t with
// c_t = sum_j P_jt x_j. Always maximized.
struct CoverageTerm {
  int target;
  Rational coef;
};

struct CoverageRow {
  std::vector<CoverageTerm> terms;
  Rational gap_coef;
  lp::Relation relation = lp::Relation::kLessEqual;
  Rational rhs;
};

struct CoverageProgram {
  std::vector<CoverageTerm> objective;
  bool has_gap = false;
  Rational gap_objective;
  std::optional<Rational> gap_upper;
  std::vector<CoverageRow> rows;
};

enum class StrategySpaceMode { kAuto, kEnumerate, kColumnGeneration };

struct StrategySpaceOptions {
  StrategySpaceMode mode = StrategySpaceMode::kAuto;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  // kAuto enumerates when the joint-schedule count bound is below this.
  std::size_t auto_enumeration_limit = 1000;
  // With an enumerated space, inducibility questions first look for exact
  // answers among the pure columns (a pure witness, or a rival weakly
  // preferred in every column) before solving the LP.
  bool pure_column_shortcuts = true;
  // Column generation first bounds inducibility programs over a relaxed
  // coverage set; a bound at or below zero settles the answer without
  // generating columns.
  bool relaxation_bound = true;
  // Column generation adds up to this many columns per pricing round
  // beyond the optimal one (see PriceJointSchedules).
  int extra_columns = 4;
};

struct CoverageProgramResult {
  lp::Status status = lp::Status::kInfeasible;
  Rational objective;
  Rational gap;
  MixedStrategy strategy;
  CoverageVector coverage;
  // Column generation stopped at a restricted-master optimum because the
  // caller's stop rule fired; objective and gap are then lower bounds.
  bool stopped_early = false;
  // Set when the stop came after pricing: the full optimum is at most this.
  std::optional<Rational> upper_bound;
  int master_solves = 0;
  int columns = 0;
};

struct MasterProgress {
  Rational gap;        // gap variable at the restricted-master optimum
  Rational objective;  // restricted-master optimum
  // After pricing: restricted optimum plus the best positive reduced cost,
  // an upper bound on the full optimum since the probabilities sum to 1.
  std::optional<Rational> upper_bound;
};

// Called after each phase-two master solve, and again once its pricing
// result gives an upper bound. Ignored by an enumerated space.
using StopRule = std::function<bool(const MasterProgress&)>;

// The defender's strategy space for one game: either all joint schedules
// (enumerated once) or a column-generation master seeded with the empty
// and greedy covering columns. Immutable after construction; Solve may be
// called concurrently.
class StrategySpace {
 public:
  explicit StrategySpace(const SecurityGame& game,
                         StrategySpaceOptions options = {});

  const SecurityGame& game() const { return game_; }
  bool enumerated() const { return enumerated_; }
  const StrategySpaceOptions& options() const { return options_; }
  // All joint schedules when enumerated, else the initial master columns.
  const std::vector<JointSchedule>& columns() const { return columns_; }

  CoverageProgramResult Solve(const CoverageProgram& program,
                              const StopRule& stop = {}) const;

  // Optimum of the program over coverage vectors c with 0 <= c_t <= 1 and
  // c_t <= sum of y over schedules containing t, where y is any fractional
  // assignment of schedules to resources (each resource used at most once
  // in total). Every implementable coverage vector qualifies, so the value
  // bounds Solve's optimum from above; kInfeasible means Solve is
  // infeasible too.
  lp::LpSolution SolveRelaxation(const CoverageProgram& program) const;

  // U_a(x, r) >= U_a(x, t) for every strategy x. Only known for an
  // enumerated space (checked column by column); false otherwise.
  bool AlwaysPreferred(int r, int t) const;

  // Drops each rival r whose row "U_a(t) >= U_a(r) + u" is implied by the
  // row of another kept rival. Needs an enumerated space and the shortcut
  // option; otherwise returns the list unchanged.
  std::vector<int> PruneRivals(std::vector<int> rivals) const;

 private:
  CoverageProgramResult SolveEnumerated(const CoverageProgram& program) const;
  CoverageProgramResult SolveByColumnGeneration(const CoverageProgram& program,
                                                const StopRule& stop) const;

  SecurityGame game_;
  StrategySpaceOptions options_;
  bool enumerated_ = false;
  std::vector<JointSchedule> columns_;
  std::vector<std::vector<char>> preferred_;  // [r][t]
};

}  // namespace ssg

#endif  // SSG_COVERAGE_PROGRAM_H_
