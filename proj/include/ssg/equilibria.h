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

#ifndef SSG_EQUILIBRIA_H_
#define SSG_EQUILIBRIA_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "ssg/coverage_program.h"
#include "ssg/game.h"
#include "ssg/rational.h"

namespace ssg {

enum class SolutionConcept { kSse, kIse };

const char* ToString(SolutionConcept solution_concept);

struct GuaranteeReport {
  Rational value;
  std::optional<int> witness_element;
  // No inducible element lies in the attack set; value is then the weak
  // tie-break value.
  bool degenerate = false;
};

struct EquilibriumResult {
  SolutionConcept solution_concept = SolutionConcept::kSse;
  MixedStrategy strategy;
  CoverageVector coverage;
  int attacked_target = 0;
  int attacked_element = 0;
  Rational optimistic_value;
  GuaranteeReport guarantee;
};

struct SolveOptions {
  StrategySpaceOptions strategy_space;
  // Per-target (per-element) LPs run on this many threads; results do not
  // depend on it.
  int jobs = 1;
};

struct InducibilityResult {
  bool inducible = false;
  // Strategy whose attack set is exactly the target (element).
  std::optional<MixedStrategy> witness;
};

// Strong Stackelberg equilibrium by one LP per target. When `partition` is
// given (flags filled) it is used for the guarantee; otherwise inducible
// elements are computed, unless `with_guarantee` is false, in which case
// the guarantee fields are left empty.
EquilibriumResult Sse(const SecurityGame& game, const SolveOptions& options = {},
                      bool with_guarantee = true,
                      const ElementPartition* partition = nullptr);
EquilibriumResult Sse(const StrategySpace& space, const SolveOptions& options,
                      bool with_guarantee,
                      const ElementPartition* partition);

InducibilityResult InducibleTarget(const SecurityGame& game, int t,
                                   const SolveOptions& options = {});
InducibilityResult InducibleTarget(const StrategySpace& space, int t);

// Element partition with every inducible flag filled.
ElementPartition InducibleElements(const SecurityGame& game,
                                   const SolveOptions& options = {});
ElementPartition InducibleElements(const StrategySpace& space,
                                   const SolveOptions& options);
// Witness strategy for an inducible element (attack set equals it).
InducibilityResult InducibleElement(const StrategySpace& space,
                                    const ElementPartition& partition, int e);

// Utility guarantee from a partition whose flags are filled.
GuaranteeReport UtilityGuarantee(const SecurityGame& game,
                                 const CoverageVector& c,
                                 const ElementPartition& partition);
GuaranteeReport UtilityGuarantee(const SecurityGame& game,
                                 const MixedStrategy& x,
                                 const ElementPartition& partition);
GuaranteeReport UtilityGuarantee(const SecurityGame& game,
                                 const MixedStrategy& x,
                                 const SolveOptions& options = {});

EquilibriumResult Ise(const SecurityGame& game,
                      const SolveOptions& options = {},
                      const ElementPartition* partition = nullptr);
EquilibriumResult Ise(const StrategySpace& space, const SolveOptions& options,
                      const ElementPartition* partition);

// ISE through the SSE of the game restricted to inducible targets. Needs a
// game without identical targets.
EquilibriumResult IseViaRestrictedGame(const SecurityGame& game,
                                       const SolveOptions& options = {});

// (n^2 M0)^n and 2 (n + 1) (n^2 M0)^(n^2).
BigInt M1Bound(int n, const BigInt& m0);
BigInt M2Bound(int n, const BigInt& m0);

struct ReductionOptions {
  SolveOptions solve;
  // Refuse when (n + 1) M2^2 has more decimal digits than this.
  std::size_t digit_budget = 10000;
};

// Largest absolute payoff value, at least 1. Requires integer payoffs.
BigInt PayoffMagnitude(const SecurityGame& game);

// Attacker payoffs scaled by (n + 1) M2^2, with t's two attacker payoffs
// lowered by one more unit.
SecurityGame ReductionGame(const SecurityGame& game, int t,
                           const ReductionOptions& options = {});

// Inducibility decided as feasibility in ReductionGame, via an SSE.
bool InducibilityViaReduction(const SecurityGame& game, int t,
                              const ReductionOptions& options = {});

// Some strategy puts t in the attack set.
bool FeasibleTarget(const SecurityGame& game, int t,
                    const SolveOptions& options = {});
bool FeasibleTarget(const StrategySpace& space, int t);
// The same question answered by an SSE of a game whose defender payoffs
// favour t.
bool FeasibleTargetViaSse(const SecurityGame& game, int t,
                          const SolveOptions& options = {});

struct SseAssessment {
  EquilibriumResult sse;
  EquilibriumResult ise;
  ElementPartition partition;
  bool overoptimistic = false;
  bool suboptimal = false;
};

// SSE and ISE sharing one element partition, with both comparisons.
SseAssessment AssessSse(const SecurityGame& game,
                        const SolveOptions& options = {});
bool SseOveroptimistic(const SecurityGame& game,
                       const SolveOptions& options = {});
bool SseSuboptimal(const SecurityGame& game, const SolveOptions& options = {});

}  // namespace ssg

#endif  // SSG_EQUILIBRIA_H_
