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

#include <cmath>
#include <optional>
#include <vector>

#include "doctest.h"
#include "ssg/errors.h"
#include "ssg/lp.h"
#include "ssg/prng.h"
#include "test_support.h"

using ssg::Rational;
using ssg::lp::LinearProgram;
using ssg::lp::Relation;
using ssg::lp::Sense;
using ssg::lp::Status;
using ssg::testing::Q;

TEST_CASE("single bounded variable") {
  LinearProgram lp;
  int x = lp.AddVariable(1);
  lp.AddSparseRow({{x, 1}}, Relation::kLessEqual, 1);
  auto sol = ssg::lp::Solve(lp);
  REQUIRE(sol.status == Status::kOptimal);
  CHECK(sol.primal[x] == 1);
  CHECK(sol.objective == 1);
  CHECK(ssg::lp::CertificateViolation(lp, sol).empty());
}

TEST_CASE("infeasible") {
  LinearProgram lp;
  int x = lp.AddVariable(1);
  lp.AddSparseRow({{x, 1}}, Relation::kLessEqual, -1);
  CHECK(ssg::lp::Solve(lp).status == Status::kInfeasible);
}

TEST_CASE("unbounded") {
  LinearProgram lp;
  int x = lp.AddVariable(1);
  int y = lp.AddVariable(0);
  lp.AddSparseRow({{x, 1}, {y, -1}}, Relation::kLessEqual, 1);
  CHECK(ssg::lp::Solve(lp).status == Status::kUnbounded);
}

TEST_CASE("free variable at the intersection of two lines") {
  // max u s.t. u <= 3x - 1, u <= 2 - x, x in [0, 1], u free.
  LinearProgram lp;
  int x = lp.AddVariable(0, Rational(0), Rational(1));
  int u = lp.AddFreeVariable(1);
  lp.AddSparseRow({{u, 1}, {x, -3}}, Relation::kLessEqual, -1);
  lp.AddSparseRow({{u, 1}, {x, 1}}, Relation::kLessEqual, 2);
  auto sol = ssg::lp::Solve(lp);
  REQUIRE(sol.status == Status::kOptimal);
  CHECK(sol.primal[x] == Q("3/4"));
  CHECK(sol.primal[u] == Q("5/4"));
  CHECK(sol.objective == Q("5/4"));
  CHECK(ssg::lp::CertificateViolation(lp, sol).empty());
}

TEST_CASE("minimize with equality and >= rows") {
  // min 2x + 3y s.t. x + y = 4, x >= 1, y >= 1/2, x <= 3.
  LinearProgram lp(Sense::kMinimize);
  int x = lp.AddVariable(2, Rational(0), Rational(3));
  int y = lp.AddVariable(3);
  lp.AddSparseRow({{x, 1}, {y, 1}}, Relation::kEqual, 4);
  lp.AddSparseRow({{x, 1}}, Relation::kGreaterEqual, 1);
  lp.AddSparseRow({{y, 1}}, Relation::kGreaterEqual, Q("1/2"));
  auto sol = ssg::lp::Solve(lp);
  REQUIRE(sol.status == Status::kOptimal);
  CHECK(sol.primal[x] == 3);
  CHECK(sol.primal[y] == 1);
  CHECK(sol.objective == 9);
  CHECK(ssg::lp::CertificateViolation(lp, sol).empty());
}

TEST_CASE("nonzero lower bounds and negative ranges") {
  // max -x with x in [-5/2, 7].
  LinearProgram lp;
  int x = lp.AddVariable(-1, Q("-5/2"), Rational(7));
  auto sol = ssg::lp::Solve(lp);
  REQUIRE(sol.status == Status::kOptimal);
  CHECK(sol.primal[x] == Q("-5/2"));
  CHECK(sol.objective == Q("5/2"));
}

TEST_CASE("structural errors") {
  LinearProgram lp;
  lp.AddVariable(1);
  CHECK_THROWS_AS(lp.AddRow({1, 2}, Relation::kLessEqual, 1),
                  ssg::LpStructureError);
  CHECK_THROWS_AS(lp.AddColumn(1, {1, 2, 3}), ssg::LpStructureError);
  LinearProgram bad;
  bad.AddVariable(1, Rational(2), Rational(1));
  CHECK_THROWS_AS(ssg::lp::Solve(bad), ssg::LpStructureError);
}

TEST_CASE("certificate check rejects a wrong solution") {
  LinearProgram lp;
  int x = lp.AddVariable(1);
  lp.AddSparseRow({{x, 1}}, Relation::kLessEqual, 1);
  auto sol = ssg::lp::Solve(lp);
  auto wrong = sol;
  wrong.primal[x] = Q("1/2");
  wrong.objective = Q("1/2");
  CHECK_FALSE(ssg::lp::CertificateViolation(lp, wrong).empty());
  wrong = sol;
  wrong.primal[x] = 2;
  wrong.objective = 2;
  CHECK_FALSE(ssg::lp::CertificateViolation(lp, wrong).empty());
}

namespace {

struct RandomLp {
  LinearProgram lp;
  std::vector<double> c;
  std::vector<std::vector<double>> a;  // rows, then bounds
  std::vector<Relation> rel;
  std::vector<double> b;
};

RandomLp MakeRandomLp(ssg::SplitMix64& rng) {
  RandomLp r;
  int n = static_cast<int>(rng.UniformInt(1, 3));
  int m = static_cast<int>(rng.UniformInt(1, 4));
  r.lp = LinearProgram(rng.UniformInt(0, 1) ? Sense::kMaximize
                                            : Sense::kMinimize);
  for (int j = 0; j < n; ++j) {
    std::int64_t cj = rng.UniformInt(-5, 5);
    std::int64_t ub = rng.UniformInt(1, 6);
    r.lp.AddVariable(Rational(cj), Rational(0), Rational(ub));
    r.c.push_back(static_cast<double>(cj));
    std::vector<double> lo(n, 0.0), hi(n, 0.0);
    lo[j] = 1;
    hi[j] = 1;
    r.a.push_back(lo);
    r.rel.push_back(Relation::kGreaterEqual);
    r.b.push_back(0);
    r.a.push_back(hi);
    r.rel.push_back(Relation::kLessEqual);
    r.b.push_back(static_cast<double>(ub));
  }
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> coef;
    std::vector<double> row;
    for (int j = 0; j < n; ++j) {
      std::int64_t v = rng.UniformInt(-5, 5);
      coef.emplace_back(v);
      row.push_back(static_cast<double>(v));
    }
    std::int64_t rhs = rng.UniformInt(-4, 10);
    Relation rel = static_cast<Relation>(rng.UniformInt(0, 2));
    r.lp.AddRow(coef, rel, Rational(rhs));
    r.a.push_back(row);
    r.rel.push_back(rel);
    r.b.push_back(static_cast<double>(rhs));
  }
  return r;
}

bool SolveSquare(std::vector<std::vector<double>> a, std::vector<double> b,
                 std::vector<double>& x) {
  int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::fabs(a[i][col]) > std::fabs(a[piv][col])) piv = i;
    if (std::fabs(a[piv][col]) < 1e-12) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      double f = a[i][col] / a[col][col];
      for (int k = col; k < n; ++k) a[i][k] -= f * a[col][k];
      b[i] -= f * b[col];
    }
  }
  x.resize(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

// Best vertex of the (bounded) feasible polytope, or nothing if empty.
std::optional<double> VertexReference(const RandomLp& r, bool maximize) {
  int n = static_cast<int>(r.c.size());
  int k = static_cast<int>(r.a.size());
  std::optional<double> best;
  std::vector<int> pick(n);
  auto feasible = [&](const std::vector<double>& x) {
    for (int i = 0; i < k; ++i) {
      double lhs = 0;
      for (int j = 0; j < n; ++j) lhs += r.a[i][j] * x[j];
      double d = lhs - r.b[i];
      if (r.rel[i] == Relation::kLessEqual && d > 1e-9) return false;
      if (r.rel[i] == Relation::kGreaterEqual && d < -1e-9) return false;
      if (r.rel[i] == Relation::kEqual && std::fabs(d) > 1e-9) return false;
    }
    return true;
  };
  // Every n-subset of constraints, taken as equalities.
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (int i : idx) {
      a.push_back(r.a[i]);
      b.push_back(r.b[i]);
    }
    std::vector<double> x;
    if (SolveSquare(a, b, x) && feasible(x)) {
      double v = 0;
      for (int j = 0; j < n; ++j) v += r.c[j] * x[j];
      if (!best || (maximize ? v > *best : v < *best)) best = v;
    }
    int p = n - 1;
    while (p >= 0 && idx[p] == k - n + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < n; ++q) idx[q] = idx[q - 1] + 1;
  }
  return best;
}

}  // namespace

TEST_CASE("random small programs agree with a vertex-enumeration reference") {
  ssg::SplitMix64 rng(77);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    RandomLp r = MakeRandomLp(rng);
    auto sol = ssg::lp::Solve(r.lp);
    auto ref = VertexReference(r, r.lp.sense() == Sense::kMaximize);
    CAPTURE(trial);
    REQUIRE(sol.status != Status::kUnbounded);
    CHECK((sol.status == Status::kOptimal) == ref.has_value());
    if (sol.status == Status::kOptimal && ref) {
      ++optimal;
      CHECK(std::fabs(sol.objective.ToDouble() - *ref) <= 1e-6);
      CHECK(ssg::lp::CertificateViolation(r.lp, sol).empty());
    } else {
      ++infeasible;
    }
  }
  // Both outcomes must actually be exercised.
  CHECK(optimal > 100);
  CHECK(infeasible > 20);
}

TEST_CASE("identical programs give identical pivots and solutions") {
  ssg::SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    RandomLp r = MakeRandomLp(rng);
    ssg::lp::Solver a(r.lp), b(r.lp);
    auto sa = a.Solve();
    auto sb = b.Solve();
    CHECK(a.trace() == b.trace());
    CHECK(sa.status == sb.status);
    CHECK(sa.primal == sb.primal);
    CHECK(sa.duals == sb.duals);
  }
}

namespace {

// max c.x over the simplex sum x = 1 with rows A x <= b.
LinearProgram SimplexLp(ssg::SplitMix64& rng, int cols, int rows) {
  LinearProgram lp;
  for (int j = 0; j < cols; ++j) lp.AddVariable(Rational(rng.UniformInt(-5, 9)));
  std::vector<Rational> ones(cols, Rational(1));
  lp.AddRow(ones, Relation::kEqual, 1);
  for (int i = 0; i < rows; ++i) {
    std::vector<Rational> coef;
    for (int j = 0; j < cols; ++j) coef.emplace_back(rng.UniformInt(-3, 3));
    lp.AddRow(coef, Relation::kLessEqual, Rational(rng.UniformInt(0, 3)));
  }
  return lp;
}

std::vector<Rational> RandomColumn(ssg::SplitMix64& rng, int rows) {
  std::vector<Rational> col{Rational(1)};
  for (int i = 0; i < rows; ++i) col.emplace_back(rng.UniformInt(-3, 3));
  return col;
}

Rational ReducedCost(const Rational& c, const std::vector<Rational>& col,
                     const std::vector<Rational>& duals) {
  Rational r = c;
  for (std::size_t i = 0; i < col.size(); ++i) r -= col[i] * duals[i];
  return r;
}

}  // namespace

TEST_CASE("adding columns") {
  ssg::SplitMix64 rng(11);
  int improving = 0, non_improving = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int cols = static_cast<int>(rng.UniformInt(1, 4));
    int rows = static_cast<int>(rng.UniformInt(0, 3));
    LinearProgram lp = SimplexLp(rng, cols, rows);
    ssg::lp::Solver solver(lp);
    auto first = solver.Solve();
    if (first.status != Status::kOptimal) continue;

    // Duplicate of column 0: optimum unchanged.
    std::vector<Rational> dup;
    for (int i = 0; i < lp.num_rows(); ++i)
      dup.push_back(lp.row(i).coefficients[0]);
    solver.AddColumn(lp.objective()[0], dup);
    auto again = solver.Solve();
    REQUIRE(again.status == Status::kOptimal);
    CHECK(again.objective == first.objective);

    // A fresh random column, judged by its reduced cost.
    Rational c(rng.UniformInt(-5, 12));
    auto col = RandomColumn(rng, rows);
    Rational rc = ReducedCost(c, col, again.duals);
    solver.AddColumn(c, col);
    auto warm = solver.Solve();
    REQUIRE(warm.status == Status::kOptimal);
    if (rc.sign() > 0) {
      ++improving;
      CHECK(warm.objective >= again.objective);
    } else {
      ++non_improving;
      CHECK(warm.objective == again.objective);
    }
    // Warm start reaches the same optimum as a cold solve.
    auto cold = ssg::lp::Solve(solver.program());
    REQUIRE(cold.status == Status::kOptimal);
    CHECK(cold.objective == warm.objective);
    CHECK(ssg::lp::CertificateViolation(solver.program(), warm).empty());
  }
  CHECK(improving > 20);
  CHECK(non_improving > 20);
}

TEST_CASE("warm objective changes and fixing at zero") {
  ssg::SplitMix64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    int cols = static_cast<int>(rng.UniformInt(2, 5));
    LinearProgram lp = SimplexLp(rng, cols, static_cast<int>(rng.UniformInt(0, 2)));
    ssg::lp::Solver solver(lp);
    if (solver.Solve().status != Status::kOptimal) continue;

    std::vector<Rational> obj;
    for (int j = 0; j < cols; ++j) obj.emplace_back(rng.UniformInt(-4, 4));
    solver.SetObjective(obj);
    int fixed = static_cast<int>(rng.UniformInt(0, cols - 1));
    solver.FixAtZero(fixed);
    auto warm = solver.Solve();

    LinearProgram ref = lp;
    for (int j = 0; j < cols; ++j) ref.set_objective(j, obj[j]);
    ref.set_upper(fixed, Rational(0));
    auto cold = ssg::lp::Solve(ref);
    REQUIRE(warm.status == cold.status);
    if (cold.status == Status::kOptimal) {
      CHECK(warm.objective == cold.objective);
      CHECK(warm.primal[fixed] == 0);
    }

    solver.SetObjective(0, Rational(7));
    ref.set_objective(0, Rational(7));
    auto warm2 = solver.Solve();
    auto cold2 = ssg::lp::Solve(ref);
    REQUIRE(warm2.status == cold2.status);
    if (cold2.status == Status::kOptimal) CHECK(warm2.objective == cold2.objective);
  }
}

TEST_CASE("large coefficients stay exact") {
  // max x s.t. 3^80 x <= 2^100.
  ssg::BigInt p3, p2;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, 80);
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, 100);
  LinearProgram lp;
  int x = lp.AddVariable(1);
  lp.AddSparseRow({{x, Rational(p3)}}, Relation::kLessEqual, Rational(p2));
  auto sol = ssg::lp::Solve(lp);
  REQUIRE(sol.status == Status::kOptimal);
  CHECK(sol.primal[x] == Rational(p2, p3));
  CHECK(ssg::lp::CertificateViolation(lp, sol).empty());
}
