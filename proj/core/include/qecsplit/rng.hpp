// Copyright 2026 The qecsplit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QECSPLIT_RNG_HPP_
#define QECSPLIT_RNG_HPP_

#include <cstdint>
#include <random>

namespace qecsplit {

using Rng = std::mt19937_64;

// Stream tags keep the setup run, chains and samplers on disjoint streams.
enum class StreamTag : std::uint32_t {
  kMonteCarlo = 1,
  kSubset = 2,
  kFraction = 3,
  kChain = 4,
};

// Independent generator for (seed, tag, index). The result depends only on
// its arguments, never on which thread asks for it.
inline Rng make_rng(std::uint64_t seed, StreamTag tag, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

}  // namespace qecsplit

#endif  // QECSPLIT_RNG_HPP_
