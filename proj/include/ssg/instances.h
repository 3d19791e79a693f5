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

#ifndef SSG_INSTANCES_H_
#define SSG_INSTANCES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ssg/game.h"

namespace ssg {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int n = 10;
  int num_schedules = 5;
  int l = 3;  // targets per schedule
  int resources = 1;
  std::int64_t reward_lo = 0;
  std::int64_t reward_hi = 5;
  std::int64_t penalty_lo = -5;
  std::int64_t penalty_hi = 0;
};

// Throws ValidationError on an infeasible configuration.
void ValidateConfig(const GeneratorConfig& cfg);

// Random integer game with homogeneous resources; a pure function of cfg.
SecurityGame RandomGame(const GeneratorConfig& cfg);

// RandomGame's schedules closed under nonempty subsets. Throws LimitError
// when l > 4.
SecurityGame RandomSsasGame(const GeneratorConfig& cfg);

inline constexpr int kMaxSsasScheduleSize = 4;

// Four targets, schedules {t1, t2, t3} and {t4}, one resource.
SecurityGame Example2Game();

// Game-file I/O. Parsing errors carry the JSON path of the offending
// field, or the line and column for syntax errors. Duplicate schedules are
// merged; each merge appends a message to `warnings` when given.
SecurityGame ParseGame(const std::string& text,
                       std::vector<std::string>* warnings = nullptr);
SecurityGame LoadGame(const std::string& path,
                      std::vector<std::string>* warnings = nullptr);
std::string SerializeGame(const SecurityGame& game);
void SaveGame(const SecurityGame& game, const std::string& path);

}  // namespace ssg

#endif  // SSG_INSTANCES_H_
