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

#include "ssg/equilibria.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "parallel.h"
#include "ssg/errors.h"

namespace ssg {
namespace {

// Attacker loss from full coverage: U_a(c, t) = att_unc - delta_a(t) c_t.
Rational DeltaA(const SecurityGame& g, int t) {
  return g.payoffs(t).att_unc - g.payoffs(t).att_cov;
}

Rational DeltaD(const SecurityGame& g, int t) {
  return g.payoffs(t).def_cov - g.payoffs(t).def_unc;
}

// U_a(c, t) - U_a(c, other) + gap_coef * u >= U^u_a(other) - U^u_a(t).
CoverageRow PreferRow(const SecurityGame& g, int t, int other,
                      Rational gap_coef, lp::Relation relation) {
  CoverageRow row;
  row.terms = {{t, -DeltaA(g, t)}, {other, DeltaA(g, other)}};
  row.gap_coef = std::move(gap_coef);
  row.relation = relation;
  row.rhs = g.payoffs(other).att_unc - g.payoffs(t).att_unc;
  return row;
}

// max u s.t. U_a(t) >= U_a(t') + u for each rival; u <= 1 keeps the
// program bounded without changing the sign of the optimum.
CoverageProgram GapProgram(const SecurityGame& g, int t,
                           const std::vector<int>& rivals) {
  CoverageProgram p;
  p.has_gap = true;
  p.gap_objective = 1;
  p.gap_upper = Rational(1);
  for (int other : rivals) {
    p.rows.push_back(
        PreferRow(g, t, other, Rational(-1), lp::Relation::kGreaterEqual));
  }
  return p;
}

std::vector<int> OtherTargets(const SecurityGame& g, int t) {
  std::vector<int> out;
  for (int u = 0; u < g.num_targets(); ++u) {
    if (u != t) out.push_back(u);
  }
  return out;
}

std::vector<int> OtherRepresentatives(const ElementPartition& p, int e) {
  std::vector<int> out;
  for (int f = 0; f < p.size(); ++f) {
    if (f != e) out.push_back(p.representative(f));
  }
  return out;
}

// A master with u > 0 already proves inducibility. Negative answers wait
// for pricing to converge.
bool GapPositive(const MasterProgress& p) { return p.gap.sign() > 0; }

// Exact answers from the pure columns alone. Attacker utilities are affine
// in x, so a rival at least as good as t in every column is at least as
// good everywhere.
std::optional<InducibilityResult> PureColumnAnswer(
    const StrategySpace& space, int t, const std::vector<int>& rivals,
    const std::vector<int>& expected_attack_set) {
  const SecurityGame& g = space.game();
  const std::vector<JointSchedule>& cols = space.columns();
  auto ua = [&](const JointSchedule& js, int u) -> const Rational& {
    return js.column[u] ? g.payoffs(u).att_cov : g.payoffs(u).att_unc;
  };
  for (const JointSchedule& js : cols) {
    bool unique = true;
    const Rational& mine = ua(js, t);
    for (int r : rivals) {
      if (ua(js, r) >= mine) {
        unique = false;
        break;
      }
    }
    if (unique) {
      CoverageVector c;
      for (int u = 0; u < g.num_targets(); ++u) c.values.emplace_back(js.column[u]);
      if (AttackSet(g, c) != expected_attack_set) {
        throw InternalInvariantError("pure witness has the wrong attack set");
      }
      return InducibilityResult{true, MixedStrategy::Pure(js)};
    }
  }
  for (int r : rivals) {
    if (space.AlwaysPreferred(r, t)) {
      return InducibilityResult{false, std::nullopt};
    }
  }
  return std::nullopt;
}

InducibilityResult SolveGap(const StrategySpace& space, int t,
                            const std::vector<int>& rivals,
                            const std::vector<int>& expected_attack_set) {
  const SecurityGame& g = space.game();
  if (space.enumerated() && space.options().pure_column_shortcuts) {
    auto quick = PureColumnAnswer(space, t, rivals, expected_attack_set);
    if (quick) return *quick;
  }
  CoverageProgram program = GapProgram(g, t, space.PruneRivals(rivals));
  if (!space.enumerated() && space.options().relaxation_bound) {
    // Over the relaxed set c_t and any rival r with U^u_a(r) < U^u_a(t) can
    // sit at zero, which satisfies r's row strictly; the sign of the bound
    // depends only on the other rivals.
    std::vector<int> threats;
    for (int r : rivals) {
      if (g.payoffs(r).att_unc >= g.payoffs(t).att_unc) threats.push_back(r);
    }
    if (!threats.empty()) {
      lp::LpSolution bound = space.SolveRelaxation(GapProgram(g, t, threats));
      if (bound.status == lp::Status::kOptimal && bound.objective.sign() <= 0) {
        return InducibilityResult{false, std::nullopt};
      }
    }
  }
  CoverageProgramResult r = space.Solve(program, GapPositive);
  if (r.status != lp::Status::kOptimal) {
    throw InternalInvariantError("inducibility LP not solved to optimality");
  }
  InducibilityResult out;
  out.inducible = r.gap.sign() > 0;
  if (out.inducible) {
    if (AttackSet(g, r.coverage) != expected_attack_set) {
      throw InternalInvariantError(
          "inducibility witness has the wrong attack set");
    }
    out.witness = std::move(r.strategy);
  }
  return out;
}

void RequireFlags(const ElementPartition& p) {
  for (const Element& e : p.elements) {
    if (!e.inducible) {
      throw PreconditionError("element partition has unset inducible flags");
    }
  }
}

CoverageProgram SseProgram(const StrategySpace& space, int t) {
  const SecurityGame& g = space.game();
  CoverageProgram p;
  p.objective = {{t, DeltaD(g, t)}};
  for (int other : space.PruneRivals(OtherTargets(g, t))) {
    p.rows.push_back(
        PreferRow(g, t, other, Rational(), lp::Relation::kGreaterEqual));
  }
  return p;
}

CoverageProgram IseProgram(const StrategySpace& space,
                           const ElementPartition& part, int e) {
  const SecurityGame& g = space.game();
  const Element& el = part.elements[e];
  const int rep = el.targets.front();
  CoverageProgram p;
  p.has_gap = true;
  p.gap_objective = 1;
  for (int other : space.PruneRivals(OtherRepresentatives(part, e))) {
    p.rows.push_back(
        PreferRow(g, rep, other, Rational(), lp::Relation::kGreaterEqual));
  }
  for (int t : el.targets) {
    CoverageRow row;
    row.terms = {{t, -DeltaD(g, t)}};
    row.gap_coef = 1;
    row.relation = lp::Relation::kLessEqual;
    row.rhs = g.payoffs(t).def_unc;
    p.rows.push_back(std::move(row));
  }
  return p;
}

// Among the optimal solutions of `p` (optimum `best`), one with maximum
// total coverage. Optimal faces are often not single points; this picks a
// reproducible member that leaves no resource idle without need.
CoverageProgramResult MaxCoverageOptimum(const StrategySpace& space,
                                         CoverageProgram p,
                                         const Rational& best) {
  CoverageRow keep;
  keep.terms = p.objective;
  keep.gap_coef = p.gap_objective;
  keep.relation = lp::Relation::kGreaterEqual;
  keep.rhs = best;
  p.rows.push_back(std::move(keep));
  p.objective.clear();
  for (int t = 0; t < space.game().num_targets(); ++t) {
    p.objective.push_back({t, Rational(1)});
  }
  p.gap_objective = 0;
  CoverageProgramResult r = space.Solve(p);
  if (r.status != lp::Status::kOptimal) {
    throw InternalInvariantError("coverage refinement LP is " +
                                 std::string(lp::ToString(r.status)));
  }
  return r;
}

// True when a candidate whose value is at most the argument cannot win.
using LosesTo = std::function<bool(const Rational&)>;

struct Candidate {
  bool feasible = false;
  Rational value;
  CoverageProgramResult lp;
};

// Evaluates candidates in order of decreasing upper bound and skips those
// that cannot beat the incumbent; the winner is the highest value with the
// lowest index, as if every candidate had been solved.
template <typename SolveOne>
int BestCandidate(const std::vector<int>& ids, const std::vector<Rational>& ub,
                  int jobs, const SolveOne& solve_one,
                  std::vector<Candidate>& results) {
  results.assign(ids.size(), Candidate{});
  if (jobs > 1) {
    internal::ParallelFor(static_cast<int>(ids.size()), jobs,
                          [&](int i) { results[i] = solve_one(ids[i], {}); });
  } else {
    std::vector<int> order(ids.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return ub[a] > ub[b]; });
    int best = -1;
    for (int i : order) {
      if (best >= 0 && (ub[i] < results[best].value ||
                        (ub[i] == results[best].value && i > best))) {
        continue;
      }
      LosesTo loses = [&, i](const Rational& v) {
        return best >= 0 && (v < results[best].value ||
                             (v == results[best].value && i > best));
      };
      results[i] = solve_one(ids[i], loses);
      if (!results[i].feasible) continue;
      if (best < 0 || results[i].value > results[best].value ||
          (results[i].value == results[best].value && i < best)) {
        best = i;
      }
    }
  }
  int best = -1;
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
    if (!results[i].feasible) continue;
    if (best < 0 || results[i].value > results[best].value) best = i;
  }
  return best;
}

}  // namespace

const char* ToString(SolutionConcept solution_concept) {
  return solution_concept == SolutionConcept::kSse ? "SSE" : "ISE";
}

EquilibriumResult Sse(const SecurityGame& game, const SolveOptions& options,
                      bool with_guarantee, const ElementPartition* partition) {
  StrategySpace space(game, options.strategy_space);
  return Sse(space, options, with_guarantee, partition);
}

EquilibriumResult Sse(const StrategySpace& space, const SolveOptions& options,
                      bool with_guarantee, const ElementPartition* partition) {
  const SecurityGame& g = space.game();
  std::vector<int> ids(g.num_targets());
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<Rational> ub;
  for (int t : ids) ub.push_back(g.payoffs(t).def_cov);
  auto solve_one = [&](int t, const LosesTo& loses) {
    Candidate c;
    StopRule stop;
    if (loses) {
      stop = [&](const MasterProgress& p) {
        return p.upper_bound && loses(g.payoffs(t).def_unc + *p.upper_bound);
      };
    }
    c.lp = space.Solve(SseProgram(space, t), stop);
    if (c.lp.stopped_early) return c;
    if (c.lp.status == lp::Status::kOptimal) {
      c.feasible = true;
      c.value = g.payoffs(t).def_unc + c.lp.objective;
    }
    return c;
  };
  std::vector<Candidate> results;
  int best = BestCandidate(ids, ub, options.jobs, solve_one, results);
  if (best < 0) throw InternalInvariantError("no SSE target LP is feasible");
  CoverageProgramResult refined = MaxCoverageOptimum(
      space, SseProgram(space, ids[best]), results[best].lp.objective);

  EquilibriumResult out;
  out.solution_concept = SolutionConcept::kSse;
  out.strategy = std::move(refined.strategy);
  out.coverage = std::move(refined.coverage);
  out.optimistic_value = results[best].value;
  TieBreakValues tb = ComputeTieBreakValues(g, out.coverage);
  if (tb.strong != out.optimistic_value) {
    throw InternalInvariantError("SSE value differs from the strong value");
  }
  out.attacked_target = tb.strong_target;
  ElementPartition computed;
  if (partition == nullptr) {
    computed = with_guarantee ? InducibleElements(space, options)
                              : ComputeElementPartition(g);
    partition = &computed;
  }
  out.attacked_element = partition->element_of[out.attacked_target];
  if (with_guarantee) {
    out.guarantee = UtilityGuarantee(g, out.coverage, *partition);
  }
  return out;
}

InducibilityResult InducibleTarget(const SecurityGame& game, int t,
                                   const SolveOptions& options) {
  StrategySpace space(game, options.strategy_space);
  return InducibleTarget(space, t);
}

InducibilityResult InducibleTarget(const StrategySpace& space, int t) {
  const SecurityGame& g = space.game();
  if (t < 0 || t >= g.num_targets()) {
    throw ValidationError("target index " + std::to_string(t) +
                          " out of range");
  }
  return SolveGap(space, t, OtherTargets(g, t), {t});
}

InducibilityResult InducibleElement(const StrategySpace& space,
                                    const ElementPartition& partition, int e) {
  return SolveGap(space, partition.representative(e),
                  OtherRepresentatives(partition, e),
                  partition.elements[e].targets);
}

ElementPartition InducibleElements(const SecurityGame& game,
                                   const SolveOptions& options) {
  StrategySpace space(game, options.strategy_space);
  return InducibleElements(space, options);
}

ElementPartition InducibleElements(const StrategySpace& space,
                                   const SolveOptions& options) {
  ElementPartition p = ComputeElementPartition(space.game());
  std::vector<char> flags(p.size());
  internal::ParallelFor(p.size(), options.jobs, [&](int e) {
    flags[e] = InducibleElement(space, p, e).inducible;
  });
  for (int e = 0; e < p.size(); ++e) p.elements[e].inducible = flags[e] != 0;
  return p;
}

GuaranteeReport UtilityGuarantee(const SecurityGame& game,
                                 const CoverageVector& c,
                                 const ElementPartition& partition) {
  RequireFlags(partition);
  GuaranteeReport report;
  for (int e : ElementAttackSet(partition, AttackSet(game, c))) {
    if (!*partition.elements[e].inducible) continue;
    Rational v = ComputeElementUtilities(game, c, partition.elements[e]).defender;
    if (!report.witness_element || v > report.value) {
      report.value = std::move(v);
      report.witness_element = e;
    }
  }
  if (!report.witness_element) {
    report.degenerate = true;
    report.value = ComputeTieBreakValues(game, c).weak;
  }
  return report;
}

GuaranteeReport UtilityGuarantee(const SecurityGame& game,
                                 const MixedStrategy& x,
                                 const ElementPartition& partition) {
  return UtilityGuarantee(game, CoverageOf(game, x), partition);
}

GuaranteeReport UtilityGuarantee(const SecurityGame& game,
                                 const MixedStrategy& x,
                                 const SolveOptions& options) {
  CoverageVector c = CoverageOf(game, x);
  return UtilityGuarantee(game, c, InducibleElements(game, options));
}

EquilibriumResult Ise(const SecurityGame& game, const SolveOptions& options,
                      const ElementPartition* partition) {
  StrategySpace space(game, options.strategy_space);
  return Ise(space, options, partition);
}

EquilibriumResult Ise(const StrategySpace& space, const SolveOptions& options,
                      const ElementPartition* partition) {
  const SecurityGame& g = space.game();
  ElementPartition computed;
  if (partition == nullptr) {
    computed = InducibleElements(space, options);
    partition = &computed;
  }
  RequireFlags(*partition);
  std::vector<int> ids;
  std::vector<Rational> ub;
  for (int e = 0; e < partition->size(); ++e) {
    const Element& el = partition->elements[e];
    if (!*el.inducible) continue;
    ids.push_back(e);
    Rational bound = g.payoffs(el.targets.front()).def_cov;
    for (int t : el.targets) bound = Min(bound, g.payoffs(t).def_cov);
    ub.push_back(std::move(bound));
  }
  if (ids.empty()) {
    throw InternalInvariantError("the game has no inducible element");
  }
  auto solve_one = [&](int e, const LosesTo& loses) {
    Candidate c;
    StopRule stop;
    if (loses) {
      stop = [&](const MasterProgress& p) {
        return p.upper_bound && loses(*p.upper_bound);
      };
    }
    c.lp = space.Solve(IseProgram(space, *partition, e), stop);
    if (c.lp.stopped_early) return c;
    if (c.lp.status != lp::Status::kOptimal) {
      throw InternalInvariantError("ISE LP of an inducible element is " +
                                   std::string(lp::ToString(c.lp.status)));
    }
    c.feasible = true;
    c.value = c.lp.gap;
    return c;
  };
  std::vector<Candidate> results;
  int best = BestCandidate(ids, ub, options.jobs, solve_one, results);
  const int e = ids[best];
  CoverageProgramResult refined = MaxCoverageOptimum(
      space, IseProgram(space, *partition, e), results[best].value);

  EquilibriumResult out;
  out.solution_concept = SolutionConcept::kIse;
  out.strategy = std::move(refined.strategy);
  out.coverage = std::move(refined.coverage);
  out.optimistic_value = results[best].value;
  out.attacked_element = e;
  Rational worst;
  bool first = true;
  for (int t : partition->elements[e].targets) {
    Rational d = DefenderUtility(g, out.coverage, t);
    if (first || d < worst) {
      worst = std::move(d);
      out.attacked_target = t;
    }
    first = false;
  }
  out.guarantee = UtilityGuarantee(g, out.coverage, *partition);
  if (out.guarantee.value != out.optimistic_value) {
    throw InternalInvariantError("ISE guarantee differs from the LP optimum");
  }
  return out;
}

EquilibriumResult IseViaRestrictedGame(const SecurityGame& game,
                                       const SolveOptions& options) {
  ElementPartition partition = ComputeElementPartition(game);
  if (!partition.all_singletons()) {
    throw PreconditionError(
        "the restricted-game path needs a game without identical targets");
  }
  StrategySpace space(game, options.strategy_space);
  std::vector<char> flags(game.num_targets());
  internal::ParallelFor(game.num_targets(), options.jobs, [&](int t) {
    flags[t] = InducibleTarget(space, t).inducible;
  });
  std::vector<int> keep;      // restricted index -> original target
  std::vector<int> position(game.num_targets(), -1);
  for (int t = 0; t < game.num_targets(); ++t) {
    partition.elements[partition.element_of[t]].inducible = flags[t] != 0;
    if (flags[t]) {
      position[t] = static_cast<int>(keep.size());
      keep.push_back(t);
    }
  }
  if (keep.empty()) {
    throw InternalInvariantError("the game has no inducible target");
  }

  PayoffTable payoffs;
  for (int t : keep) payoffs.push_back(game.payoffs(t));
  std::vector<Schedule> schedules;
  std::map<Schedule, int> index;
  std::vector<int> restricted_of(game.num_schedules(), -1);
  for (int s = 0; s < game.num_schedules(); ++s) {
    Schedule cut;
    for (int t : game.schedule(s)) {
      if (position[t] >= 0) cut.push_back(position[t]);
    }
    if (cut.empty()) continue;
    auto [it, inserted] =
        index.emplace(cut, static_cast<int>(schedules.size()));
    if (inserted) schedules.push_back(std::move(cut));
    restricted_of[s] = it->second;
  }
  std::vector<std::vector<int>> resources(game.num_resources());
  // preimage[r][s'] = lowest original schedule of resource r cut to s'.
  std::vector<std::vector<int>> preimage(
      game.num_resources(), std::vector<int>(schedules.size(), -1));
  for (int r = 0; r < game.num_resources(); ++r) {
    for (int s : game.allowed(r)) {
      int sp = restricted_of[s];
      if (sp < 0 || preimage[r][sp] >= 0) continue;
      preimage[r][sp] = s;
      resources[r].push_back(sp);
    }
  }
  SecurityGame restricted(std::move(payoffs), std::move(schedules),
                          std::move(resources));
  EquilibriumResult sub = Sse(restricted, options, false);

  EquilibriumResult out;
  out.solution_concept = SolutionConcept::kIse;
  for (const StrategyEntry& entry : sub.strategy.support) {
    std::vector<int> assignment(game.num_resources(), kUnassigned);
    for (int r = 0; r < game.num_resources(); ++r) {
      int sp = entry.schedule.assignment[r];
      if (sp != kUnassigned) assignment[r] = preimage[r][sp];
    }
    out.strategy.support.push_back(StrategyEntry{
        MakeJointSchedule(game, std::move(assignment)), entry.probability});
  }
  out.coverage = CoverageOf(game, out.strategy);
  out.attacked_target = keep[sub.attacked_target];
  out.attacked_element = partition.element_of[out.attacked_target];
  out.optimistic_value = sub.optimistic_value;
  out.guarantee = UtilityGuarantee(game, out.coverage, partition);
  return out;
}

BigInt M1Bound(int n, const BigInt& m0) {
  if (n < 1 || m0 < 1) throw PreconditionError("M1 needs n >= 1 and M0 >= 1");
  BigInt base = BigInt(n) * n * m0;
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt M2Bound(int n, const BigInt& m0) {
  if (n < 1 || m0 < 1) throw PreconditionError("M2 needs n >= 1 and M0 >= 1");
  BigInt base = BigInt(n) * n * m0;
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(n) * static_cast<unsigned long>(n));
  return BigInt(2) * (n + 1) * power;
}

BigInt PayoffMagnitude(const SecurityGame& game) {
  BigInt m0 = 1;
  for (const TargetPayoffs& p : game.payoffs()) {
    for (const Rational* v : {&p.def_cov, &p.def_unc, &p.att_cov, &p.att_unc}) {
      if (!v->is_integer()) {
        throw PreconditionError("the reduction requires integer payoffs");
      }
      BigInt a = abs(v->numerator());
      if (a > m0) m0 = a;
    }
  }
  return m0;
}

SecurityGame ReductionGame(const SecurityGame& game, int t,
                           const ReductionOptions& options) {
  const int n = game.num_targets();
  if (t < 0 || t >= n) {
    throw ValidationError("target index " + std::to_string(t) +
                          " out of range");
  }
  BigInt m0 = PayoffMagnitude(game);
  if (!ComputeElementPartition(game).all_singletons()) {
    throw PreconditionError("the reduction requires no identical targets");
  }
  // The M2 exponent alone tells whether the budget can hold: K has about
  // 2 n^2 log10(n^2 M0) digits.
  double estimate = 2.0 * n * n * std::log10(static_cast<double>(n) * n *
                                             m0.get_d());
  if (estimate > 2.0 * static_cast<double>(options.digit_budget) + 64) {
    throw LimitError("reduction coefficient exceeds the digit budget of " +
                     std::to_string(options.digit_budget));
  }
  BigInt m2 = M2Bound(n, m0);
  BigInt k = BigInt(n + 1) * m2 * m2;
  if (DecimalDigits(k) > options.digit_budget) {
    throw LimitError("reduction coefficient has " +
                     std::to_string(DecimalDigits(k)) +
                     " digits, above the budget of " +
                     std::to_string(options.digit_budget));
  }
  Rational scale(k);
  PayoffTable payoffs = game.payoffs();
  for (int u = 0; u < n; ++u) {
    payoffs[u].att_cov *= scale;
    payoffs[u].att_unc *= scale;
    if (u == t) {
      payoffs[u].att_cov -= 1;
      payoffs[u].att_unc -= 1;
    }
  }
  return SecurityGame(std::move(payoffs), game.schedules(), game.resources());
}

bool InducibilityViaReduction(const SecurityGame& game, int t,
                              const ReductionOptions& options) {
  return FeasibleTargetViaSse(ReductionGame(game, t, options), t,
                              options.solve);
}

bool FeasibleTarget(const SecurityGame& game, int t,
                    const SolveOptions& options) {
  StrategySpace space(game, options.strategy_space);
  return FeasibleTarget(space, t);
}

bool FeasibleTarget(const StrategySpace& space, int t) {
  const SecurityGame& g = space.game();
  if (t < 0 || t >= g.num_targets()) {
    throw ValidationError("target index " + std::to_string(t) +
                          " out of range");
  }
  CoverageProgramResult r =
      space.Solve(GapProgram(g, t, space.PruneRivals(OtherTargets(g, t))),
                  [](const MasterProgress& p) { return p.gap.sign() >= 0; });
  if (r.status != lp::Status::kOptimal) {
    throw InternalInvariantError("feasibility LP not solved to optimality");
  }
  return r.gap.sign() >= 0;
}

bool FeasibleTargetViaSse(const SecurityGame& game, int t,
                          const SolveOptions& options) {
  if (t < 0 || t >= game.num_targets()) {
    throw ValidationError("target index " + std::to_string(t) +
                          " out of range");
  }
  PayoffTable payoffs = game.payoffs();
  for (int u = 0; u < game.num_targets(); ++u) {
    payoffs[u].def_unc = u == t ? 3 : 1;
    payoffs[u].def_cov = u == t ? 4 : 2;
  }
  SecurityGame favour(std::move(payoffs), game.schedules(), game.resources());
  EquilibriumResult sse = Sse(favour, options, false);
  std::vector<int> gamma = AttackSet(favour, sse.coverage);
  return std::binary_search(gamma.begin(), gamma.end(), t);
}

SseAssessment AssessSse(const SecurityGame& game, const SolveOptions& options) {
  StrategySpace space(game, options.strategy_space);
  SseAssessment a;
  a.partition = InducibleElements(space, options);
  a.sse = Sse(space, options, true, &a.partition);
  a.ise = Ise(space, options, &a.partition);
  a.overoptimistic = a.sse.optimistic_value > a.sse.guarantee.value;
  a.suboptimal = a.sse.guarantee.value < a.ise.guarantee.value;
  return a;
}

bool SseOveroptimistic(const SecurityGame& game, const SolveOptions& options) {
  return AssessSse(game, options).overoptimistic;
}

bool SseSuboptimal(const SecurityGame& game, const SolveOptions& options) {
  return AssessSse(game, options).suboptimal;
}

}  // namespace ssg
