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

#ifndef SSG_PRNG_H_
#define SSG_PRNG_H_

#include <cstdint>

namespace ssg {

// SplitMix64. See docs/prng.md for the exact algorithm and test vectors.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform integer in [lo, hi] by rejection sampling; lo <= hi.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// The SplitMix64 output function applied to one value.
std::uint64_t Mix64(std::uint64_t z);

// Seed of the independent stream number `index` under a master seed.
std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t index);

}  // namespace ssg

#endif  // SSG_PRNG_H_
