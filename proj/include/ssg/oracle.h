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

#ifndef SSG_ORACLE_H_
#define SSG_ORACLE_H_

#include <cstddef>
#include <vector>

#include "ssg/game.h"
#include "ssg/rational.h"

// Brute-force checks of the LP machinery by deterministic grid scans over
// the joint-schedule simplex. Only suitable for tiny strategy spaces.
namespace ssg::oracle {

inline constexpr std::size_t kDefaultMaxGridPoints = 2'000'000;
inline constexpr int kDefaultDenominator = 200;

// Probes the limit in the guarantee's definition: moves mass between pairs
// of columns (support columns as sources, any joint schedule as sink) in
// `samples` equal steps up to `radius`, and returns the largest weak
// tie-break value seen, x itself included.
Rational GuaranteeByPerturbation(const SecurityGame& game,
                                 const MixedStrategy& x, const Rational& radius,
                                 int samples);

// True iff some grid strategy with the given denominator has attack set
// exactly {t}.
bool InducibleBrute(const SecurityGame& game, int t, int denominator,
                    std::size_t max_points = kDefaultMaxGridPoints);

// Per element of ComputeElementPartition: some grid strategy has attack
// set exactly that element.
std::vector<bool> InducibleElementsBrute(
    const SecurityGame& game, int denominator,
    std::size_t max_points = kDefaultMaxGridPoints);

// Largest non-degenerate utility guarantee over grid strategies, with
// inducibility flags taken from InducibleElementsBrute on the same grid.
// Throws PreconditionError if every grid strategy is degenerate.
Rational IseBrute(const SecurityGame& game, int denominator,
                  std::size_t max_points = kDefaultMaxGridPoints);

}  // namespace ssg::oracle

#endif  // SSG_ORACLE_H_
