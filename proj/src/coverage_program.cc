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

#include "ssg/coverage_program.h"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "ssg/errors.h"

namespace ssg {
namespace {

std::string Key(const JointSchedule& js) {
  return std::string(js.column.begin(), js.column.end());
}

Rational Dot(const std::vector<CoverageTerm>& terms,
             const std::vector<std::uint8_t>& column) {
  Rational sum;
  for (const CoverageTerm& term : terms) {
    if (column[term.target]) sum += term.coef;
  }
  return sum;
}

// Row coefficients of one joint-schedule column; the last entry is the
// simplex row.
std::vector<Rational> ColumnEntries(const CoverageProgram& program,
                                    const JointSchedule& js) {
  std::vector<Rational> col;
  col.reserve(program.rows.size() + 1);
  for (const CoverageRow& row : program.rows) {
    col.push_back(Dot(row.terms, js.column));
  }
  col.emplace_back(1);
  return col;
}

// A row the gap variable alone can satisfy by decreasing.
bool GapRelaxes(const CoverageProgram& program, const CoverageRow& row) {
  if (!program.has_gap) return false;
  int s = row.gap_coef.sign();
  return (row.relation == lp::Relation::kGreaterEqual && s < 0) ||
         (row.relation == lp::Relation::kLessEqual && s > 0);
}

void CheckProgram(const SecurityGame& game, const CoverageProgram& program) {
  auto check_terms = [&](const std::vector<CoverageTerm>& terms) {
    for (const CoverageTerm& term : terms) {
      if (term.target < 0 || term.target >= game.num_targets()) {
        throw LpStructureError("coverage term references unknown target");
      }
    }
  };
  check_terms(program.objective);
  for (const CoverageRow& row : program.rows) {
    check_terms(row.terms);
    if (row.relation == lp::Relation::kEqual) {
      throw LpStructureError("coverage programs take inequality rows only");
    }
    if (!program.has_gap && !row.gap_coef.is_zero()) {
      throw LpStructureError("gap coefficient without a gap variable");
    }
  }
}

struct Assembled {
  lp::LinearProgram lp;
  int gap_var = -1;
  int sigma_var = -1;
  int first_column = 0;
};

// Variables: [u] [sigma] columns... Rows: program rows, then sum x = 1.
Assembled Assemble(const CoverageProgram& program,
                   const std::vector<JointSchedule>& columns, bool sigma,
                   bool phase_one) {
  Assembled a;
  if (program.has_gap) {
    a.gap_var = a.lp.AddVariable(phase_one ? Rational() : program.gap_objective,
                                 std::nullopt, program.gap_upper);
  }
  if (sigma) a.sigma_var = a.lp.AddVariable(Rational(-1));
  a.first_column = a.lp.num_variables();
  for (const JointSchedule& js : columns) {
    a.lp.AddVariable(phase_one ? Rational() : Dot(program.objective, js.column));
  }
  const int nv = a.lp.num_variables();
  for (const CoverageRow& row : program.rows) {
    std::vector<Rational> coefs(nv);
    if (a.gap_var >= 0) coefs[a.gap_var] = row.gap_coef;
    if (a.sigma_var >= 0 && !GapRelaxes(program, row)) {
      coefs[a.sigma_var] =
          row.relation == lp::Relation::kGreaterEqual ? 1 : -1;
    }
    for (std::size_t j = 0; j < columns.size(); ++j) {
      coefs[a.first_column + j] = Dot(row.terms, columns[j].column);
    }
    a.lp.AddRow(std::move(coefs), row.relation, row.rhs);
  }
  std::vector<Rational> simplex(nv);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    simplex[a.first_column + j] = 1;
  }
  a.lp.AddRow(std::move(simplex), lp::Relation::kEqual, Rational(1));
  return a;
}

void Collect(const SecurityGame& game, const std::vector<JointSchedule>& cols,
             const Assembled& a, const lp::LpSolution& sol,
             CoverageProgramResult& out) {
  out.status = sol.status;
  out.columns = static_cast<int>(cols.size());
  if (sol.status != lp::Status::kOptimal) return;
  out.objective = sol.objective;
  if (a.gap_var >= 0) out.gap = sol.primal[a.gap_var];
  out.coverage.values.assign(game.num_targets(), Rational());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Rational& p = sol.primal[a.first_column + j];
    if (p.sign() <= 0) continue;
    out.strategy.support.push_back(StrategyEntry{cols[j], p});
    for (int t = 0; t < game.num_targets(); ++t) {
      if (cols[j].column[t]) out.coverage.values[t] += p;
    }
  }
}

}  // namespace

StrategySpace::StrategySpace(const SecurityGame& game,
                             StrategySpaceOptions options)
    : game_(game), options_(options) {
  switch (options.mode) {
    case StrategySpaceMode::kEnumerate:
      enumerated_ = true;
      break;
    case StrategySpaceMode::kColumnGeneration:
      enumerated_ = false;
      break;
    case StrategySpaceMode::kAuto:
      enumerated_ = JointScheduleCountBound(game, options.auto_enumeration_limit) <
                    options.auto_enumeration_limit;
      break;
  }
  if (enumerated_) {
    columns_ = EnumerateJointSchedules(game_, options.enumeration_cap);
    const int n = game_.num_targets();
    preferred_.assign(n, std::vector<char>(n, 0));
    for (int r = 0; r < n; ++r) {
      const TargetPayoffs& pr = game_.payoffs(r);
      for (int t = 0; t < n; ++t) {
        const TargetPayoffs& pt = game_.payoffs(t);
        // ok[a][b]: r's utility in state a is >= t's in state b (1 = covered).
        bool ok[2][2] = {{pr.att_unc >= pt.att_unc, pr.att_unc >= pt.att_cov},
                         {pr.att_cov >= pt.att_unc, pr.att_cov >= pt.att_cov}};
        bool all = true;
        for (const JointSchedule& js : columns_) {
          if (!ok[js.column[r]][js.column[t]]) {
            all = false;
            break;
          }
        }
        preferred_[r][t] = all;
      }
    }
  } else {
    columns_.push_back(EmptyJointSchedule(game_));
    for (JointSchedule& js : GreedyCoveringColumns(game_)) {
      columns_.push_back(std::move(js));
    }
  }
}

lp::LpSolution StrategySpace::SolveRelaxation(
    const CoverageProgram& program) const {
  CheckProgram(game_, program);
  const int n = game_.num_targets();
  lp::LinearProgram lp;
  int gap = -1;
  if (program.has_gap) {
    gap = lp.AddVariable(program.gap_objective, std::nullopt, program.gap_upper);
  }
  // Targets the program never mentions are unconstrained here, and so are
  // schedules covering none of the rest; both are left out.
  std::vector<Rational> obj(n);
  std::vector<char> used(n, 0);
  for (const CoverageTerm& term : program.objective) {
    obj[term.target] += term.coef;
    used[term.target] = 1;
  }
  for (const CoverageRow& row : program.rows) {
    for (const CoverageTerm& term : row.terms) used[term.target] = 1;
  }
  std::vector<int> c_of(n, -1);
  for (int t = 0; t < n; ++t) {
    if (used[t]) c_of[t] = lp.AddVariable(obj[t], Rational(0), Rational(1));
  }
  auto touches = [&](int s) {
    for (int t : game_.schedule(s)) {
      if (used[t]) return true;
    }
    return false;
  };
  // Resources with equal allowed sets share one set of y variables.
  std::vector<std::pair<std::vector<int>, int>> classes;
  for (int r = 0; r < game_.num_resources(); ++r) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) {
      return c.first == game_.allowed(r);
    });
    if (it == classes.end()) {
      classes.emplace_back(game_.allowed(r), 1);
    } else {
      ++it->second;
    }
  }
  // y_of[k]: (schedule, variable) for the useful schedules of class k.
  std::vector<std::vector<std::pair<int, int>>> y_of(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (int s : classes[k].first) {
      if (touches(s)) y_of[k].emplace_back(s, lp.AddVariable(Rational()));
    }
  }
  for (const CoverageRow& row : program.rows) {
    std::vector<std::pair<int, Rational>> terms;
    if (gap >= 0 && !row.gap_coef.is_zero()) terms.emplace_back(gap, row.gap_coef);
    for (const CoverageTerm& term : row.terms) {
      terms.emplace_back(c_of[term.target], term.coef);
    }
    lp.AddSparseRow(terms, row.relation, row.rhs);
  }
  for (int t = 0; t < n; ++t) {
    if (!used[t]) continue;
    std::vector<std::pair<int, Rational>> terms{{c_of[t], Rational(1)}};
    for (const auto& ys : y_of) {
      for (const auto& [s, v] : ys) {
        const Schedule& sched = game_.schedule(s);
        if (std::binary_search(sched.begin(), sched.end(), t)) {
          terms.emplace_back(v, Rational(-1));
        }
      }
    }
    lp.AddSparseRow(terms, lp::Relation::kLessEqual, Rational());
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& [s, v] : y_of[k]) terms.emplace_back(v, Rational(1));
    if (!terms.empty()) {
      lp.AddSparseRow(terms, lp::Relation::kLessEqual, Rational(classes[k].second));
    }
  }
  return lp::Solve(lp);
}

bool StrategySpace::AlwaysPreferred(int r, int t) const {
  return enumerated_ && preferred_[r][t];
}

std::vector<int> StrategySpace::PruneRivals(std::vector<int> rivals) const {
  if (!enumerated_ || !options_.pure_column_shortcuts) return rivals;
  // r2 covers r when r2 is always preferred and, on equal profiles, has the
  // lower index; this order is strict, so every dropped rival has a kept
  // cover.
  auto covers = [&](int r2, int r) {
    return preferred_[r2][r] && (!preferred_[r][r2] || r2 < r);
  };
  std::vector<int> kept;
  for (int r : rivals) {
    bool implied = false;
    for (int r2 : rivals) {
      if (r2 != r && covers(r2, r)) {
        implied = true;
        break;
      }
    }
    if (!implied) kept.push_back(r);
  }
  return kept;
}

CoverageProgramResult StrategySpace::Solve(const CoverageProgram& program,
                                           const StopRule& stop) const {
  CheckProgram(game_, program);
  if (enumerated_) return SolveEnumerated(program);
  return SolveByColumnGeneration(program, stop);
}

CoverageProgramResult StrategySpace::SolveEnumerated(
    const CoverageProgram& program) const {
  Assembled a = Assemble(program, columns_, false, false);
  lp::LpSolution sol = lp::Solve(a.lp);
  CoverageProgramResult out;
  out.master_solves = 1;
  Collect(game_, columns_, a, sol, out);
  return out;
}

namespace {

void AddMasterColumn(const CoverageProgram& program, bool phase_one,
                     JointSchedule js, lp::Solver& solver,
                     std::vector<JointSchedule>& cols) {
  Rational obj = phase_one ? Rational() : Dot(program.objective, js.column);
  solver.AddColumn(std::move(obj), ColumnEntries(program, js));
  cols.push_back(std::move(js));
}

}  // namespace

CoverageProgramResult StrategySpace::SolveByColumnGeneration(
    const CoverageProgram& program, const StopRule& stop) const {
  bool sigma = false;
  for (const CoverageRow& row : program.rows) {
    if (!GapRelaxes(program, row)) sigma = true;
  }
  std::vector<JointSchedule> cols = columns_;
  std::unordered_set<std::string> present;
  for (const JointSchedule& js : cols) present.insert(Key(js));

  Assembled a = Assemble(program, cols, sigma, sigma);
  lp::Solver solver(a.lp);
  bool phase_one = sigma;
  const int num_rows = static_cast<int>(program.rows.size());
  CoverageProgramResult out;

  while (true) {
    lp::LpSolution sol = solver.Solve();
    ++out.master_solves;
    if (sol.status != lp::Status::kOptimal) {
      Collect(game_, cols, a, sol, out);
      return out;
    }
    MasterProgress progress;
    if (!phase_one && stop) {
      if (a.gap_var >= 0) progress.gap = sol.primal[a.gap_var];
      progress.objective = sol.objective;
      if (stop(progress)) {
        Collect(game_, cols, a, sol, out);
        out.stopped_early = true;
        return out;
      }
    }
    // Reduced cost of a column: sum_t P_jt w_t minus the simplex-row dual.
    std::vector<Rational> weights(game_.num_targets());
    if (!phase_one) {
      for (const CoverageTerm& term : program.objective) {
        weights[term.target] += term.coef;
      }
    }
    for (int i = 0; i < num_rows; ++i) {
      const Rational& y = sol.duals[i];
      if (y.is_zero()) continue;
      for (const CoverageTerm& term : program.rows[i].terms) {
        weights[term.target] -= y * term.coef;
      }
    }
    std::vector<PricingResult> found = PriceJointSchedules(
        game_, weights, sol.duals[num_rows], options_.extra_columns);
    PricingResult& priced = found.front();
    if (!phase_one && stop && priced.reduced_cost.sign() > 0) {
      progress.upper_bound = sol.objective + priced.reduced_cost;
      if (stop(progress)) {
        Collect(game_, cols, a, sol, out);
        out.stopped_early = true;
        out.upper_bound = std::move(progress.upper_bound);
        return out;
      }
    }
    if (phase_one && sol.objective + priced.reduced_cost < 0) {
      // Phase one maximizes -sigma; this bound proves sigma > 0 everywhere.
      out.status = lp::Status::kInfeasible;
      out.columns = static_cast<int>(cols.size());
      return out;
    }
    if (priced.reduced_cost.sign() > 0) {
      if (!present.insert(Key(priced.schedule)).second) {
        throw InternalInvariantError(
            "pricing returned a column already in the master");
      }
      AddMasterColumn(program, phase_one, std::move(priced.schedule), solver,
                      cols);
      for (std::size_t i = 1; i < found.size(); ++i) {
        PricingResult& more = found[i];
        if (present.insert(Key(more.schedule)).second) {
          AddMasterColumn(program, phase_one, std::move(more.schedule), solver,
                          cols);
        }
      }
      continue;
    }
    if (!phase_one) {
      Collect(game_, cols, a, sol, out);
      return out;
    }
    if (sol.primal[a.sigma_var].sign() > 0) {
      out.status = lp::Status::kInfeasible;
      out.columns = static_cast<int>(cols.size());
      return out;
    }
    // Feasible: drop the artificial and switch to the real objective.
    phase_one = false;
    solver.FixAtZero(a.sigma_var);
    std::vector<Rational> objective(solver.program().num_variables());
    if (a.gap_var >= 0) objective[a.gap_var] = program.gap_objective;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      objective[a.first_column + j] = Dot(program.objective, cols[j].column);
    }
    solver.SetObjective(std::move(objective));
  }
}

}  // namespace ssg
