// Copyright 2026 The gnmd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GNMD_RNG_HPP_
#define GNMD_RNG_HPP_

#include <cstdint>
#include <random>

namespace gnmd {

// Pseudorandom stream used everywhere in the library.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Independent streams are derived from (master seed, index, tag)
// through std::seed_seq, which is likewise fully specified. Uniform reals and
// bounded integers are produced here rather than through the <random>
// distributions, whose algorithms vary between standard libraries. Together
// this makes every sample reproducible bit-for-bit across platforms.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  // Independent stream for trial `index` of an experiment seeded with
  // `master`. `tag` separates unrelated uses of the same trial index.
  static Rng stream(std::uint64_t master, std::uint64_t index,
                    std::uint64_t tag = 0);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gnmd

#endif  // GNMD_RNG_HPP_
