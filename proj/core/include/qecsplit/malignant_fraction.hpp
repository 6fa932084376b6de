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


#ifndef QECSPLIT_MALIGNANT_FRACTION_HPP_
#define QECSPLIT_MALIGNANT_FRACTION_HPP_

#include <cstdint>

#include "qecsplit/circuit.hpp"
#include "qecsplit/malignancy.hpp"

namespace qecsplit {

enum class FractionMode : std::uint8_t { kExhaustive, kSampled };

struct FractionOptions {
  FractionMode mode = FractionMode::kExhaustive;
  // Exhaustive: refuse when there are more events than this. Sampled: draws.
  std::uint64_t budget = 50'000'000;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  // Normal quantile for the Wilson interval.
  double z = 1.959963984540054;
};

struct MalignantFraction {
  std::size_t weight = 0;
  FractionMode mode = FractionMode::kExhaustive;
  std::uint64_t malignant = 0;
  std::uint64_t total = 0;
  double fraction = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

// Number of weight-k events: Σ over k-gate sets of Π |faults(g)|.
double count_weight_events(const Circuit& circuit, std::size_t k);

// Fraction of weight-k events (each gate set with every fault assignment
// counted once) that are malignant. Sampled mode draws uniformly from that
// same event set. Exhaustive mode throws InvalidParameter if the event count
// exceeds the budget; use sampled mode then.
MalignantFraction malignant_fraction(const Circuit& circuit, const EventClassifier& classifier, std::size_t k,
                                     const FractionOptions& options = {});

}  // namespace qecsplit

#endif  // QECSPLIT_MALIGNANT_FRACTION_HPP_
