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

#include "ssg/lp.h"

#include <algorithm>
#include <atomic>
#include <climits>
#include <sstream>

#include "ssg/errors.h"

namespace ssg::lp {
namespace {

std::atomic<std::uint64_t> verified_solves{0};
std::atomic<std::uint64_t> optimal_solves{0};

constexpr int kAux = INT_MIN;

// Bland's order: structural columns first, then slacks, then the phase-one
// auxiliary variable.
std::int64_t BlandKey(int code) {
  if (code == kAux) return std::int64_t{1} << 50;
  if (code >= 0) return code;
  return (std::int64_t{1} << 40) + (-1 - static_cast<std::int64_t>(code));
}

}  // namespace

const char* ToString(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "?";
}

int LinearProgram::AddVariable(Rational objective,
                               std::optional<Rational> lower,
                               std::optional<Rational> upper) {
  objective_.push_back(std::move(objective));
  lower_.push_back(std::move(lower));
  upper_.push_back(std::move(upper));
  for (Row& row : rows_) row.coefficients.emplace_back();
  return num_variables() - 1;
}

int LinearProgram::AddRow(std::vector<Rational> coefficients,
                          Relation relation, Rational rhs) {
  if (static_cast<int>(coefficients.size()) != num_variables()) {
    throw LpStructureError("row has " + std::to_string(coefficients.size()) +
                           " coefficients for " +
                           std::to_string(num_variables()) + " variables");
  }
  rows_.push_back(Row{std::move(coefficients), relation, std::move(rhs)});
  return num_rows() - 1;
}

int LinearProgram::AddSparseRow(
    const std::vector<std::pair<int, Rational>>& terms, Relation relation,
    Rational rhs) {
  std::vector<Rational> dense(objective_.size());
  for (const auto& [var, coef] : terms) {
    if (var < 0 || var >= num_variables()) {
      throw LpStructureError("row references unknown variable " +
                             std::to_string(var));
    }
    dense[var] += coef;
  }
  return AddRow(std::move(dense), relation, std::move(rhs));
}

int LinearProgram::AddColumn(Rational objective, std::vector<Rational> column) {
  if (static_cast<int>(column.size()) != num_rows()) {
    throw LpStructureError("column has " + std::to_string(column.size()) +
                           " coefficients for " + std::to_string(num_rows()) +
                           " rows");
  }
  objective_.push_back(std::move(objective));
  lower_.emplace_back(Rational(0));
  upper_.emplace_back();
  for (int i = 0; i < num_rows(); ++i) {
    rows_[i].coefficients.push_back(std::move(column[i]));
  }
  return num_variables() - 1;
}

void LinearProgram::set_objective(int var, Rational c) {
  if (var < 0 || var >= num_variables()) {
    throw LpStructureError("unknown variable " + std::to_string(var));
  }
  objective_[var] = std::move(c);
}

void LinearProgram::set_upper(int var, std::optional<Rational> upper) {
  if (var < 0 || var >= num_variables()) {
    throw LpStructureError("unknown variable " + std::to_string(var));
  }
  upper_[var] = std::move(upper);
}

void LinearProgram::Validate() const {
  for (int j = 0; j < num_variables(); ++j) {
    if (lower_[j] && upper_[j] && *upper_[j] < *lower_[j]) {
      throw LpStructureError("variable " + std::to_string(j) +
                             " has an empty bound range");
    }
  }
  for (int i = 0; i < num_rows(); ++i) {
    if (static_cast<int>(rows_[i].coefficients.size()) != num_variables()) {
      throw LpStructureError("row " + std::to_string(i) +
                             " does not match the variable count");
    }
  }
}

// ---------------------------------------------------------------------------
// Dictionary: x_B = rhs - T x_N,  z = z0 + d . x_N  (always maximizing).

struct Solver::Dictionary {
  struct VarMap {
    int pos = -1;
    int neg = -1;
    bool flipped = false;  // x = offset - y_pos
    Rational offset;
  };
  struct RowMap {
    int plus = -1;   // internal row holding a.x <= b
    int minus = -1;  // internal row holding -a.x <= -b
  };

  std::vector<VarMap> var_map;
  std::vector<RowMap> row_map;
  std::vector<Rational> cost;  // per internal structural column
  Rational cost_offset;
  int num_struct = 0;
  int m = 0;

  std::vector<int> basis;
  std::vector<int> nonbasic;
  std::vector<std::vector<Rational>> T;
  std::vector<Rational> rhs;
  std::vector<Rational> d;
  Rational z0;
  std::vector<char> barred;  // per internal structural column

  mpq_class scratch;

  Rational CostOf(int code) const {
    return code >= 0 ? cost[code] : Rational(0);
  }
  bool IsBarred(int code) const { return code >= 0 && barred[code]; }

  void Pivot(int r, int k, std::vector<lp::Pivot>& trace) {
    const int K = static_cast<int>(nonbasic.size());
    Rational inv = Rational(1) / T[r][k];
    std::vector<int> nz;
    nz.reserve(K);
    for (int c = 0; c < K; ++c) {
      if (c == k || T[r][c].is_zero()) continue;
      T[r][c] *= inv;
      nz.push_back(c);
    }
    T[r][k] = inv;
    rhs[r] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || T[i][k].is_zero()) continue;
      Rational f = T[i][k];
      for (int c : nz) T[i][c].SubProduct(f, T[r][c], scratch);
      rhs[i].SubProduct(f, rhs[r], scratch);
      T[i][k] = -(f * inv);
    }
    if (!d[k].is_zero()) {
      Rational f = d[k];
      for (int c : nz) d[c].SubProduct(f, T[r][c], scratch);
      z0 += f * rhs[r];
      d[k] = -(f * inv);
    }
    trace.push_back(lp::Pivot{nonbasic[k], basis[r]});
    std::swap(basis[r], nonbasic[k]);
  }

  // Bland entering column: lowest-key eligible nonbasic with d > 0.
  int Entering() const {
    int best = -1;
    for (int c = 0; c < static_cast<int>(nonbasic.size()); ++c) {
      if (d[c].sign() <= 0 || IsBarred(nonbasic[c])) continue;
      if (best < 0 || BlandKey(nonbasic[c]) < BlandKey(nonbasic[best])) {
        best = c;
      }
    }
    return best;
  }

  // Minimum-ratio row, ties broken by lowest basic key; -1 if unbounded.
  int Leaving(int k) const {
    int best = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (T[i][k].sign() <= 0) continue;
      Rational ratio = rhs[i] / T[i][k];
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio && BlandKey(basis[i]) < BlandKey(basis[best]))) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  // Runs Bland pivots until optimal (true) or unbounded (false).
  bool Optimize(std::vector<lp::Pivot>& trace, int& iterations) {
    for (;;) {
      int k = Entering();
      if (k < 0) return true;
      int r = Leaving(k);
      if (r < 0) return false;
      Pivot(r, k, trace);
      ++iterations;
    }
  }

  void ComputeReducedCosts() {
    const int K = static_cast<int>(nonbasic.size());
    d.assign(K, Rational());
    for (int c = 0; c < K; ++c) d[c] = CostOf(nonbasic[c]);
    z0 = cost_offset;
    for (int i = 0; i < m; ++i) {
      Rational cb = CostOf(basis[i]);
      if (cb.is_zero()) continue;
      for (int c = 0; c < K; ++c) {
        if (!T[i][c].is_zero()) d[c].SubProduct(cb, T[i][c], scratch);
      }
      z0 += cb * rhs[i];
    }
  }

  void RemoveColumn(int k) {
    for (auto& row : T) row.erase(row.begin() + k);
    nonbasic.erase(nonbasic.begin() + k);
    if (static_cast<int>(d.size()) > k) d.erase(d.begin() + k);
  }
};

namespace {

using Dictionary = Solver::Dictionary;

}  // namespace

Solver::Solver(LinearProgram lp, SolverOptions options)
    : lp_(std::move(lp)), options_(options) {
  lp_.Validate();
}

Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

namespace {

// Builds the internal all-slack dictionary for lp (maximization form).
std::unique_ptr<Dictionary> BuildDictionary(const LinearProgram& lp) {
  auto dict = std::make_unique<Dictionary>();
  Dictionary& D = *dict;
  const int n = lp.num_variables();
  const Rational sense =
      lp.sense() == Sense::kMaximize ? Rational(1) : Rational(-1);

  struct BoundRow {
    int col;
    Rational rhs;
  };
  std::vector<BoundRow> bound_rows;
  D.var_map.resize(n);
  for (int j = 0; j < n; ++j) {
    auto& vm = D.var_map[j];
    const auto& lo = lp.lower(j);
    const auto& hi = lp.upper(j);
    Rational c = sense * lp.objective()[j];
    if (lo) {
      vm.pos = D.num_struct++;
      vm.offset = *lo;
      D.cost.push_back(c);
      if (hi) bound_rows.push_back({vm.pos, *hi - *lo});
    } else if (hi) {
      vm.pos = D.num_struct++;
      vm.flipped = true;
      vm.offset = *hi;
      D.cost.push_back(-c);
    } else {
      vm.pos = D.num_struct++;
      vm.neg = D.num_struct++;
      D.cost.push_back(c);
      D.cost.push_back(-c);
    }
    D.cost_offset += c * vm.offset;
  }
  D.barred.assign(D.num_struct, 0);

  D.row_map.resize(lp.num_rows());
  auto push_row = [&](std::vector<Rational> coefs, Rational rhs) {
    D.T.push_back(std::move(coefs));
    D.rhs.push_back(std::move(rhs));
    return static_cast<int>(D.T.size()) - 1;
  };
  for (int i = 0; i < lp.num_rows(); ++i) {
    const Row& row = lp.row(i);
    std::vector<Rational> coefs(D.num_struct);
    Rational rhs = row.rhs;
    for (int j = 0; j < n; ++j) {
      const Rational& a = row.coefficients[j];
      if (a.is_zero()) continue;
      const auto& vm = D.var_map[j];
      coefs[vm.pos] = vm.flipped ? -a : a;
      if (vm.neg >= 0) coefs[vm.neg] = -a;
      if (!vm.offset.is_zero()) rhs -= a * vm.offset;
    }
    if (row.relation != Relation::kGreaterEqual) {
      D.row_map[i].plus = push_row(coefs, rhs);
    }
    if (row.relation != Relation::kLessEqual) {
      for (auto& c : coefs) c = -c;
      D.row_map[i].minus = push_row(std::move(coefs), -rhs);
    }
  }
  for (auto& br : bound_rows) {
    std::vector<Rational> coefs(D.num_struct);
    coefs[br.col] = Rational(1);
    push_row(std::move(coefs), std::move(br.rhs));
  }
  D.m = static_cast<int>(D.T.size());
  D.basis.resize(D.m);
  for (int i = 0; i < D.m; ++i) D.basis[i] = -1 - i;
  D.nonbasic.resize(D.num_struct);
  for (int c = 0; c < D.num_struct; ++c) D.nonbasic[c] = c;
  return dict;
}

// Chvátal's single-auxiliary phase one. Returns false when infeasible.
bool PhaseOne(Dictionary& D, std::vector<Pivot>& trace, int& iterations) {
  int most_negative = -1;
  for (int i = 0; i < D.m; ++i) {
    if (D.rhs[i].sign() < 0 &&
        (most_negative < 0 || D.rhs[i] < D.rhs[most_negative])) {
      most_negative = i;
    }
  }
  if (most_negative < 0) return true;

  for (auto& row : D.T) row.emplace_back(-1);
  D.nonbasic.push_back(kAux);
  const int aux_col = static_cast<int>(D.nonbasic.size()) - 1;
  D.d.assign(D.nonbasic.size(), Rational());
  D.d[aux_col] = Rational(-1);
  D.z0 = Rational();
  D.Pivot(most_negative, aux_col, trace);
  ++iterations;
  D.Optimize(trace, iterations);  // bounded above by zero
  if (D.z0.sign() < 0) return false;

  for (int i = 0; i < D.m; ++i) {
    if (D.basis[i] != kAux) continue;
    int best = -1;
    for (int c = 0; c < static_cast<int>(D.nonbasic.size()); ++c) {
      if (D.T[i][c].is_zero() || D.IsBarred(D.nonbasic[c])) continue;
      if (best < 0 || BlandKey(D.nonbasic[c]) < BlandKey(D.nonbasic[best])) {
        best = c;
      }
    }
    if (best < 0) {
      throw InternalInvariantError("auxiliary variable cannot leave basis");
    }
    D.Pivot(i, best, trace);
    ++iterations;
    break;
  }
  auto it = std::find(D.nonbasic.begin(), D.nonbasic.end(), kAux);
  D.RemoveColumn(static_cast<int>(it - D.nonbasic.begin()));
  return true;
}

LpSolution Extract(const LinearProgram& lp, const Dictionary& D) {
  LpSolution sol;
  sol.status = Status::kOptimal;
  std::vector<Rational> internal(D.num_struct);
  for (int i = 0; i < D.m; ++i) {
    if (D.basis[i] >= 0) internal[D.basis[i]] = D.rhs[i];
  }
  const int n = lp.num_variables();
  sol.primal.resize(n);
  for (int j = 0; j < n; ++j) {
    const auto& vm = D.var_map[j];
    Rational x = vm.offset;
    if (vm.flipped) {
      x -= internal[vm.pos];
    } else {
      x += internal[vm.pos];
    }
    if (vm.neg >= 0) x -= internal[vm.neg];
    sol.primal[j] = std::move(x);
  }

  std::vector<Rational> slack_dual(D.m);
  for (int c = 0; c < static_cast<int>(D.nonbasic.size()); ++c) {
    int code = D.nonbasic[c];
    if (code < 0 && code != kAux) slack_dual[-1 - code] = -D.d[c];
  }
  const bool minimize = lp.sense() == Sense::kMinimize;
  sol.duals.resize(lp.num_rows());
  for (int i = 0; i < lp.num_rows(); ++i) {
    Rational y;
    if (D.row_map[i].plus >= 0) y += slack_dual[D.row_map[i].plus];
    if (D.row_map[i].minus >= 0) y -= slack_dual[D.row_map[i].minus];
    sol.duals[i] = minimize ? -y : y;
  }
  sol.reduced_costs = lp.objective();
  mpq_class scratch;
  for (int i = 0; i < lp.num_rows(); ++i) {
    if (sol.duals[i].is_zero()) continue;
    const auto& coefs = lp.row(i).coefficients;
    for (int j = 0; j < n; ++j) {
      if (!coefs[j].is_zero()) {
        sol.reduced_costs[j].SubProduct(sol.duals[i], coefs[j], scratch);
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!sol.primal[j].is_zero()) {
      sol.objective += lp.objective()[j] * sol.primal[j];
    }
  }
  return sol;
}

}  // namespace

LpSolution Solver::Solve() {
  int iterations = 0;
  if (!dict_) {
    dict_ = BuildDictionary(lp_);
    if (!PhaseOne(*dict_, trace_, iterations)) {
      dict_.reset();
      LpSolution sol;
      sol.status = Status::kInfeasible;
      sol.iterations = iterations;
      return sol;
    }
    dict_->ComputeReducedCosts();
  }
  if (!dict_->Optimize(trace_, iterations)) {
    dict_.reset();
    LpSolution sol;
    sol.status = Status::kUnbounded;
    sol.iterations = iterations;
    return sol;
  }
  LpSolution sol = Extract(lp_, *dict_);
  sol.iterations = iterations;
  optimal_solves.fetch_add(1, std::memory_order_relaxed);
  if (options_.verify) {
    std::string violation = CertificateViolation(lp_, sol);
    if (!violation.empty()) {
      throw InternalInvariantError("LP certificate check failed: " +
                                   violation);
    }
    verified_solves.fetch_add(1, std::memory_order_relaxed);
  }
  return sol;
}

int Solver::AddColumn(Rational objective, std::vector<Rational> column) {
  if (static_cast<int>(column.size()) != lp_.num_rows()) {
    throw LpStructureError("column length does not match the row count");
  }
  int var = lp_.AddColumn(objective, column);
  if (!dict_) return var;

  Dictionary& D = *dict_;
  const Rational sense =
      lp_.sense() == Sense::kMaximize ? Rational(1) : Rational(-1);
  Dictionary::VarMap vm;
  vm.pos = D.num_struct++;
  D.var_map.push_back(vm);
  D.cost.push_back(sense * objective);
  D.barred.push_back(0);

  // Internal coefficients of the new column, then B^-1 a via the slack
  // columns of the current dictionary.
  std::vector<Rational> internal(D.m);
  for (int i = 0; i < lp_.num_rows(); ++i) {
    if (column[i].is_zero()) continue;
    if (D.row_map[i].plus >= 0) internal[D.row_map[i].plus] = column[i];
    if (D.row_map[i].minus >= 0) internal[D.row_map[i].minus] = -column[i];
  }
  std::vector<int> slack_row(D.m, -1), slack_col(D.m, -1);
  for (int i = 0; i < D.m; ++i) {
    if (D.basis[i] < 0) slack_row[-1 - D.basis[i]] = i;
  }
  for (int c = 0; c < static_cast<int>(D.nonbasic.size()); ++c) {
    if (D.nonbasic[c] < 0) slack_col[-1 - D.nonbasic[c]] = c;
  }
  std::vector<Rational> tcol(D.m);
  Rational dnew = D.cost.back();
  mpq_class scratch;
  for (int q = 0; q < D.m; ++q) {
    const Rational& a = internal[q];
    if (a.is_zero()) continue;
    if (slack_row[q] >= 0) {
      tcol[slack_row[q]] += a;
    } else {
      int k = slack_col[q];
      for (int r = 0; r < D.m; ++r) {
        if (!D.T[r][k].is_zero()) tcol[r] += a * D.T[r][k];
      }
      dnew += a * D.d[k];
    }
  }
  for (int r = 0; r < D.m; ++r) D.T[r].push_back(std::move(tcol[r]));
  D.nonbasic.push_back(vm.pos);
  D.d.push_back(std::move(dnew));
  return var;
}

void Solver::SetObjective(int var, Rational c) {
  std::vector<Rational> all = lp_.objective();
  all.at(var) = std::move(c);
  SetObjective(std::move(all));
}

void Solver::SetObjective(std::vector<Rational> objective) {
  if (static_cast<int>(objective.size()) != lp_.num_variables()) {
    throw LpStructureError("objective length does not match the variables");
  }
  for (int j = 0; j < lp_.num_variables(); ++j) {
    lp_.set_objective(j, objective[j]);
  }
  if (!dict_) return;
  Dictionary& D = *dict_;
  const Rational sense =
      lp_.sense() == Sense::kMaximize ? Rational(1) : Rational(-1);
  D.cost_offset = Rational();
  for (int j = 0; j < lp_.num_variables(); ++j) {
    const auto& vm = D.var_map[j];
    Rational sc = sense * lp_.objective()[j];
    if (!vm.offset.is_zero()) D.cost_offset += sc * vm.offset;
    if (vm.neg >= 0) D.cost[vm.neg] = -sc;
    D.cost[vm.pos] = vm.flipped ? -sc : std::move(sc);
  }
  D.ComputeReducedCosts();
}

void Solver::FixAtZero(int var) {
  if (var < 0 || var >= lp_.num_variables() || !lp_.lower(var) ||
      !lp_.lower(var)->is_zero()) {
    throw LpStructureError("FixAtZero needs a variable with lower bound 0");
  }
  lp_.set_upper(var, Rational(0));
  if (!dict_) return;
  Dictionary& D = *dict_;
  const int code = D.var_map[var].pos;
  for (int i = 0; i < D.m; ++i) {
    if (D.basis[i] != code) continue;
    if (!D.rhs[i].is_zero()) {
      dict_.reset();  // positive value: rebuild from scratch next time
      return;
    }
    int best = -1;
    for (int c = 0; c < static_cast<int>(D.nonbasic.size()); ++c) {
      if (D.T[i][c].is_zero() || D.IsBarred(D.nonbasic[c])) continue;
      if (best < 0 || BlandKey(D.nonbasic[c]) < BlandKey(D.nonbasic[best])) {
        best = c;
      }
    }
    if (best >= 0) D.Pivot(i, best, trace_);
    break;
  }
  D.barred[code] = 1;
}

LpSolution Solve(const LinearProgram& lp, SolverOptions options) {
  Solver solver(lp, options);
  return solver.Solve();
}

std::uint64_t VerifiedSolveCount() {
  return verified_solves.load(std::memory_order_relaxed);
}

std::uint64_t OptimalSolveCount() {
  return optimal_solves.load(std::memory_order_relaxed);
}

std::string CertificateViolation(const LinearProgram& lp,
                                 const LpSolution& sol) {
  std::ostringstream err;
  const int n = lp.num_variables();
  if (sol.status != Status::kOptimal) return "status is not optimal";
  if (static_cast<int>(sol.primal.size()) != n ||
      static_cast<int>(sol.duals.size()) != lp.num_rows() ||
      static_cast<int>(sol.reduced_costs.size()) != n) {
    return "solution dimensions do not match the program";
  }
  const int s = lp.sense() == Sense::kMaximize ? 1 : -1;
  mpq_class scratch;

  Rational objective;
  for (int j = 0; j < n; ++j) objective += lp.objective()[j] * sol.primal[j];
  if (objective != sol.objective) return "reported objective mismatch";

  Rational dual_value;
  for (int i = 0; i < lp.num_rows(); ++i) {
    const Row& row = lp.row(i);
    Rational lhs;
    for (int j = 0; j < n; ++j) {
      if (!row.coefficients[j].is_zero() && !sol.primal[j].is_zero()) {
        lhs += row.coefficients[j] * sol.primal[j];
      }
    }
    Rational slack = lhs - row.rhs;
    int ys = sol.duals[i].sign() * s;
    switch (row.relation) {
      case Relation::kLessEqual:
        if (slack.sign() > 0) err << "row " << i << " violated";
        if (ys < 0) err << "row " << i << " dual has wrong sign";
        break;
      case Relation::kGreaterEqual:
        if (slack.sign() < 0) err << "row " << i << " violated";
        if (ys > 0) err << "row " << i << " dual has wrong sign";
        break;
      case Relation::kEqual:
        if (!slack.is_zero()) err << "row " << i << " violated";
        break;
    }
    if (!slack.is_zero() && !sol.duals[i].is_zero()) {
      err << "row " << i << " breaks complementary slackness";
    }
    if (!err.str().empty()) return err.str();
    dual_value += row.rhs * sol.duals[i];
  }

  Rational bound_value;
  for (int j = 0; j < n; ++j) {
    Rational check = lp.objective()[j];
    for (int i = 0; i < lp.num_rows(); ++i) {
      check.SubProduct(sol.duals[i], lp.row(i).coefficients[j], scratch);
    }
    if (check != sol.reduced_costs[j]) {
      err << "variable " << j << " reduced cost mismatch";
      return err.str();
    }
    const auto& lo = lp.lower(j);
    const auto& hi = lp.upper(j);
    const Rational& x = sol.primal[j];
    if ((lo && x < *lo) || (hi && x > *hi)) {
      err << "variable " << j << " violates its bounds";
      return err.str();
    }
    bool at_lo = lo && x == *lo;
    bool at_hi = hi && x == *hi;
    int ds = check.sign() * s;
    if (at_lo && at_hi) {
      // fixed: any sign
    } else if (at_lo) {
      if (ds > 0) err << "variable " << j << " reduced cost sign at lower";
    } else if (at_hi) {
      if (ds < 0) err << "variable " << j << " reduced cost sign at upper";
    } else if (ds != 0) {
      err << "variable " << j << " basic with nonzero reduced cost";
    }
    if (!err.str().empty()) return err.str();
    if (!check.is_zero()) bound_value += check * x;
  }
  if (objective != dual_value + bound_value) return "strong duality fails";
  return {};
}

}  // namespace ssg::lp
