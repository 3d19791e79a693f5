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

#ifndef SSG_REPORT_H_
#define SSG_REPORT_H_

#include <string>

#include "json.hpp"
#include "ssg/equilibria.h"
#include "ssg/game.h"

// JSON renderings used by the command-line tool. Targets and elements are
// reported 1-based; schedule indices in strategy keys are the 0-based
// positions in the game file.
namespace ssg::report {

using Json = nlohmann::ordered_json;

// {"value": "p/q", "decimal": "..."}
Json Value(const Rational& r);

// Key of a joint schedule: one entry per resource, the schedule index or
// "-" when unassigned, joined by commas.
std::string AssignmentKey(const JointSchedule& js);

// {"<assignment key>": "p/q", ...}
Json Strategy(const MixedStrategy& x);

// Inverse of Strategy. Accepts the object itself or any object holding it
// under "strategy" (so an sse/ise report can be fed back). Throws
// InvalidStrategyError / ValidationError.
MixedStrategy ParseStrategy(const SecurityGame& game, const std::string& text);

Json Coverage(const CoverageVector& c);
Json Guarantee(const GuaranteeReport& g, const ElementPartition& partition);
Json Equilibrium(const EquilibriumResult& r, const ElementPartition& partition);

}  // namespace ssg::report

#endif  // SSG_REPORT_H_
