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

#include "ssg/prng.h"

#include <stdexcept>

namespace ssg {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}  // namespace

std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::Next() {
  state_ += kGolden;
  return Mix64(state_);
}

std::int64_t SplitMix64::UniformInt(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("UniformInt: empty range");
  const std::uint64_t range =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(Next());  // full 2^64
  // Reject the lowest 2^64 mod range outputs so the remainder is uniform.
  const std::uint64_t threshold = (0 - range) % range;
  std::uint64_t x;
  do {
    x = Next();
  } while (x < threshold);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t index) {
  return Mix64(seed ^ Mix64(index + kGolden));
}

}  // namespace ssg
