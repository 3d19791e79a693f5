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

#ifndef SSG_EXPERIMENTS_H_
#define SSG_EXPERIMENTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ssg/equilibria.h"
#include "ssg/instances.h"
#include "ssg/rational.h"

namespace ssg {

enum class ExperimentMode { kInducibility, kOveropt, kScalability };

// Parses "inducibility", "overopt" or "scalability".
ExperimentMode ParseExperimentMode(const std::string& name);
const char* ToString(ExperimentMode mode);

struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::kOveropt;
  // Trial i uses the game generated with seed StreamSeed(base.seed, i).
  GeneratorConfig base;
  // Scalability only: target counts to run, in order. Empty means base.n.
  std::vector<int> sizes;
  int trials = 10;
  // Solve the example2 fixture game in every trial instead of random games.
  bool example2_fixture = false;
  int jobs = 1;
  SolveOptions solve;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int num_schedules = 0;
  int l = 0;
  int resources = 0;
  // inducibility
  int inducible_targets = 0;
  // overopt
  Rational sse_u;
  Rational sse_g;
  Rational ise_g;
  bool overoptimistic = false;
  bool suboptimal = false;
  bool sse_g_degenerate = false;
  // scalability, wall-clock milliseconds
  double sse_ms = 0;
  double ise_ms = 0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRecord> records;  // size-major, then trial order

  // Fixed CSV contract, see docs/csv.md.
  std::string ToCsv() const;
};

ExperimentResult RunExperiment(const ExperimentConfig& config);

}  // namespace ssg

#endif  // SSG_EXPERIMENTS_H_
