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

#ifndef SSG_LP_H_
#define SSG_LP_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssg/rational.h"

// Exact rational linear programming: a dense dictionary simplex with Bland's
// rule, dual extraction, and incremental column addition for warm-started
// column generation.
namespace ssg::lp {

enum class Sense { kMaximize, kMinimize };
enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Status { kOptimal, kInfeasible, kUnbounded };

const char* ToString(Status status);

struct Row {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

class LinearProgram {
 public:
  explicit LinearProgram(Sense sense = Sense::kMaximize) : sense_(sense) {}

  // Variables default to [0, +inf). A missing bound means unbounded.
  int AddVariable(Rational objective,
                  std::optional<Rational> lower = Rational(0),
                  std::optional<Rational> upper = std::nullopt);
  int AddFreeVariable(Rational objective) {
    return AddVariable(std::move(objective), std::nullopt, std::nullopt);
  }
  // Dense row; the coefficient count must equal num_variables().
  int AddRow(std::vector<Rational> coefficients, Relation relation,
             Rational rhs);
  int AddSparseRow(const std::vector<std::pair<int, Rational>>& terms,
                   Relation relation, Rational rhs);
  // Appends a [0, +inf) variable with the given per-row coefficients.
  int AddColumn(Rational objective, std::vector<Rational> column);

  void set_objective(int var, Rational c);
  void set_upper(int var, std::optional<Rational> upper);

  Sense sense() const { return sense_; }
  int num_variables() const { return static_cast<int>(objective_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::optional<Rational>& lower(int var) const { return lower_[var]; }
  const std::optional<Rational>& upper(int var) const { return upper_[var]; }
  const Row& row(int i) const { return rows_[i]; }

  // Throws LpStructureError on inconsistent dimensions or empty bound ranges.
  void Validate() const;

 private:
  Sense sense_;
  std::vector<Rational> objective_;
  std::vector<std::optional<Rational>> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<Row> rows_;
};

struct LpSolution {
  Status status = Status::kInfeasible;
  std::vector<Rational> primal;
  // One multiplier per row, signed so that reduced_costs = c - A^T duals.
  std::vector<Rational> duals;
  std::vector<Rational> reduced_costs;
  Rational objective;
  int iterations = 0;
};

// Empty when (lp, solution) is an exact optimality certificate: primal
// feasibility, dual sign conditions, complementary slackness and strong
// duality. Otherwise a description of the first violation.
std::string CertificateViolation(const LinearProgram& lp,
                                 const LpSolution& solution);

// Number of optimal solves whose certificate has been checked in this
// process (only counted when certificate checking is enabled).
std::uint64_t VerifiedSolveCount();
// Number of solves in this process that ended Optimal.
std::uint64_t OptimalSolveCount();

struct SolverOptions {
#ifdef SSG_VERIFY_LP
  bool verify = true;
#else
  bool verify = false;
#endif
};

// One simplex pivot: the entering and leaving variables, encoded as
// structural index >= 0 or -(1 + internal row) for slacks.
struct Pivot {
  int entering;
  int leaving;
  friend bool operator==(const Pivot&, const Pivot&) = default;
};

// Stateful solver. After an optimal solve the final dictionary is kept, so
// AddColumn / SetObjective / FixAtZero followed by Solve() continue from the
// previous basis instead of starting over.
class Solver {
 public:
  explicit Solver(LinearProgram lp, SolverOptions options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  const LinearProgram& program() const { return lp_; }

  LpSolution Solve();

  int AddColumn(Rational objective, std::vector<Rational> column);
  void SetObjective(int var, Rational c);
  // Replaces the whole objective vector.
  void SetObjective(std::vector<Rational> objective);
  // Restricts a [0, +inf) variable to 0 for all subsequent solves.
  void FixAtZero(int var);

  const std::vector<Pivot>& trace() const { return trace_; }

  struct Dictionary;  // internal simplex state

 private:
  LinearProgram lp_;
  SolverOptions options_;
  std::unique_ptr<Dictionary> dict_;
  std::vector<Pivot> trace_;
};

// One-shot convenience wrapper.
LpSolution Solve(const LinearProgram& lp, SolverOptions options = {});

}  // namespace ssg::lp

#endif  // SSG_LP_H_
