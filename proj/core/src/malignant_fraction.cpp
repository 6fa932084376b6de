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


#include "qecsplit/malignant_fraction.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qecsplit/errors.hpp"
#include "qecsplit/parallel.hpp"
#include "qecsplit/rng.hpp"

namespace qecsplit {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double f = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (f + z2 / (2.0 * n)) / (1.0 + z2 / n);
  const double half = z / (1.0 + z2 / n) * std::sqrt(f * (1.0 - f) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double count_weight_events(const Circuit& circuit, std::size_t k) {
  // Elementary symmetric polynomial of the per-gate fault counts.
  std::vector<double> e(k + 1, 0.0);
  e[0] = 1.0;
  for (const Gate& g : circuit.gates()) {
    const double w = static_cast<double>(fault_count(g.kind));
    for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * w;
  }
  return e[k];
}

namespace {

// Every event whose smallest gate is `first`.
std::uint64_t enumerate_from(const Circuit& circuit, const EventClassifier& classifier, std::size_t k,
                             std::uint32_t first, std::uint64_t& total) {
  const auto n = static_cast<std::uint32_t>(circuit.num_gates());
  std::vector<std::uint32_t> gates{first};
  std::vector<FaultPair> pairs(k);
  std::uint64_t malignant = 0;

  // Assign faults to the chosen gates, then classify.
  auto assign = [&](auto&& self, std::size_t pos) -> void {
    if (pos == k) {
      ++total;
      if (classifier.is_malignant(Event::from_pairs(pairs))) ++malignant;
      return;
    }
    const GateKind kind = circuit.gate(gates[pos]).kind;
    for (std::size_t i = 0; i < fault_count(kind); ++i) {
      pairs[pos] = {gates[pos], fault_label_at(kind, i)};
      self(self, pos + 1);
    }
  };
  auto choose = [&](auto&& self, std::uint32_t from) -> void {
    if (gates.size() == k) {
      assign(assign, 0);
      return;
    }
    for (std::uint32_t g = from; g < n; ++g) {
      gates.push_back(g);
      self(self, g + 1);
      gates.pop_back();
    }
  };
  choose(choose, first + 1);
  return malignant;
}

}  // namespace

MalignantFraction malignant_fraction(const Circuit& circuit, const EventClassifier& classifier, std::size_t k,
                                     const FractionOptions& options) {
  if (k < 1) throw InvalidParameter("malignant fraction needs k >= 1");
  if (k > circuit.num_gates()) throw InvalidParameter("k exceeds the number of gates");
  const std::size_t threads = options.threads == 0 ? default_thread_count() : options.threads;
  MalignantFraction out;
  out.weight = k;
  out.mode = options.mode;

  if (options.mode == FractionMode::kExhaustive) {
    if (count_weight_events(circuit, k) > static_cast<double>(options.budget)) {
      throw InvalidParameter("exhaustive enumeration exceeds the budget; use sampled mode");
    }
    const std::size_t n = circuit.num_gates();
    std::vector<std::uint64_t> bad(n, 0), total(n, 0);
    parallel_for(n, threads, [&](std::size_t g) {
      bad[g] = enumerate_from(circuit, classifier, k, static_cast<std::uint32_t>(g), total[g]);
    });
    for (std::size_t g = 0; g < n; ++g) {
      out.malignant += bad[g];
      out.total += total[g];
    }
    out.fraction = out.total == 0 ? 0.0 : static_cast<double>(out.malignant) / static_cast<double>(out.total);
    out.ci_low = out.ci_high = out.fraction;
    return out;
  }

  if (options.budget == 0) throw InvalidParameter("sampled mode needs a positive budget");
  // Gates drawn proportionally to their fault count, rejecting repeats, make
  // every (gate set, fault assignment) equally likely.
  std::vector<double> weights;
  for (const Gate& g : circuit.gates()) weights.push_back(static_cast<double>(fault_count(g.kind)));
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (options.budget + kBlock - 1) / kBlock;
  std::vector<std::uint64_t> bad(blocks, 0);
  parallel_for(blocks, threads, [&](std::size_t b) {
    Rng rng = make_rng(options.seed, StreamTag::kFraction, b);
    std::discrete_distribution<std::uint32_t> pick(weights.begin(), weights.end());
    const std::uint64_t n = std::min(kBlock, options.budget - b * kBlock);
    std::vector<FaultPair> pairs(k);
    for (std::uint64_t s = 0; s < n; ++s) {
      for (;;) {
        for (auto& p : pairs) p.gate = pick(rng);
        std::sort(pairs.begin(), pairs.end());
        bool distinct = true;
        for (std::size_t i = 1; i < k; ++i) distinct = distinct && pairs[i].gate != pairs[i - 1].gate;
        if (distinct) break;
      }
      for (auto& p : pairs) {
        const GateKind kind = circuit.gate(p.gate).kind;
        p.fault = fault_label_at(kind, std::uniform_int_distribution<std::size_t>(0, fault_count(kind) - 1)(rng));
      }
      if (classifier.is_malignant(Event::from_pairs(pairs))) ++bad[b];
    }
  });
  out.total = options.budget;
  for (std::uint64_t f : bad) out.malignant += f;
  out.fraction = static_cast<double>(out.malignant) / static_cast<double>(out.total);
  const Interval ci = wilson_interval(out.malignant, out.total, options.z);
  out.ci_low = ci.low;
  out.ci_high = ci.high;
  return out;
}

}  // namespace qecsplit
