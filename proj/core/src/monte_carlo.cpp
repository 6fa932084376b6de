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


#include "qecsplit/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "qecsplit/errors.hpp"
#include "qecsplit/parallel.hpp"

namespace qecsplit {

FaultSampler::FaultSampler(const NoiseModel& noise) : noise_(&noise), uniform_(noise.is_uniform()) {
  for (std::size_t k = 0; k < kNumGateKinds; ++k) {
    double acc = 0.0;
    for (double q : noise.distribution(static_cast<GateKind>(k))) {
      acc += q;
      cumulative_[k].push_back(acc);
    }
  }
}

FaultLabel FaultSampler::draw_fault(GateKind kind, Rng& rng) const {
  const auto& cum = cumulative_[static_cast<std::size_t>(kind)];
  const double u = uniform01(rng) * cum.back();
  auto it = std::upper_bound(cum.begin(), cum.end(), u);
  std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - cum.begin()), cum.size() - 1);
  return fault_label_at(kind, i);
}

Event FaultSampler::sample(Rng& rng) const {
  std::vector<FaultPair> pairs;
  const std::size_t n = noise_->num_gates();
  if (uniform_) {
    const double p = n == 0 ? 0.0 : noise_->failure_probability(0);
    if (p <= 0.0) return Event();
    std::geometric_distribution<std::uint64_t> skip(p);
    for (std::uint64_t g = skip(rng); g < n; g += 1 + skip(rng)) {
      const auto gate = static_cast<std::uint32_t>(g);
      pairs.push_back({gate, draw_fault(noise_->kind(gate), rng)});
    }
  } else {
    for (std::uint32_t g = 0; g < n; ++g) {
      const double pr = noise_->failure_probability(g);
      if (pr > 0.0 && uniform01(rng) < pr) pairs.push_back({g, draw_fault(noise_->kind(g), rng)});
    }
  }
  return Event::from_pairs(std::move(pairs));
}

Event FaultSampler::sample_weight(std::size_t k, Rng& rng) const {
  const std::size_t n = noise_->num_gates();
  if (k > n) throw InvalidParameter("event weight exceeds the number of gates");
  // Floyd's algorithm for a uniform k-subset.
  std::unordered_set<std::uint32_t> chosen;
  for (std::size_t j = n - k; j < n; ++j) {
    const auto t = static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, j)(rng));
    if (!chosen.insert(t).second) chosen.insert(static_cast<std::uint32_t>(j));
  }
  std::vector<std::uint32_t> gates(chosen.begin(), chosen.end());
  std::sort(gates.begin(), gates.end());
  std::vector<FaultPair> pairs;
  pairs.reserve(k);
  for (std::uint32_t g : gates) pairs.push_back({g, draw_fault(noise_->kind(g), rng)});
  return Event::from_pairs(std::move(pairs));
}

double negative_binomial_rate(std::uint64_t failures, std::uint64_t shots) {
  if (failures < 2 || shots < 2) throw InvalidParameter("negative binomial estimate needs k >= 2");
  return static_cast<double>(failures - 1) / static_cast<double>(shots - 1);
}

namespace {

struct Block {
  std::uint64_t shots = 0;
  // Cumulative non-empty events before each failure, then the block total.
  std::vector<std::uint64_t> evaluated_before;
  std::uint64_t evaluated = 0;
  // Shot offsets (within the block) of failures, with their events.
  std::vector<std::uint64_t> fail_at;
  std::vector<Event> events;
};

}  // namespace

McResult mc_estimate(const NoiseModel& noise, const EventClassifier& classifier, const McOptions& options) {
  if (!(noise.p() > 0.0)) throw InvalidParameter("Monte Carlo needs p > 0");
  if (options.stop_failures < 2) throw InvalidParameter("stop_failures must be at least 2");
  if (options.block_shots == 0) throw InvalidParameter("block_shots must be positive");
  const FaultSampler sampler(noise);
  const std::size_t threads = options.threads == 0 ? default_thread_count() : options.threads;
  const std::uint64_t bs = options.block_shots;
  const std::uint64_t total_blocks = (options.max_shots + bs - 1) / bs;

  McResult result;
  std::uint64_t done_blocks = 0;
  std::uint64_t failures = 0;
  std::uint64_t evaluations = 0;
  while (done_blocks < total_blocks) {
    const std::uint64_t wave = std::min<std::uint64_t>(total_blocks - done_blocks, 2 * threads);
    std::vector<Block> blocks(wave);
    parallel_for(wave, threads, [&](std::size_t i) {
      const std::uint64_t b = done_blocks + i;
      Block& out = blocks[i];
      out.shots = std::min(bs, options.max_shots - b * bs);
      Rng rng = make_rng(options.seed, StreamTag::kMonteCarlo, b);
      for (std::uint64_t s = 0; s < out.shots; ++s) {
        Event e = sampler.sample(rng);
        if (e.empty()) continue;
        ++out.evaluated;
        if (classifier.is_malignant(e)) {
          out.fail_at.push_back(s);
          out.evaluated_before.push_back(out.evaluated);
          out.events.push_back(std::move(e));
        }
      }
    });
    // Merge in block order so the stopping shot is schedule independent.
    for (std::uint64_t i = 0; i < wave; ++i) {
      const Block& blk = blocks[i];
      const std::uint64_t base = (done_blocks + i) * bs;
      for (std::size_t j = 0; j < blk.fail_at.size(); ++j) {
        ++failures;
        if (result.harvested.size() < options.harvest &&
            std::find(result.harvested.begin(), result.harvested.end(), blk.events[j]) == result.harvested.end()) {
          result.harvested.push_back(blk.events[j]);
        }
        if (failures == options.stop_failures) {
          result.failures = failures;
          result.shots = base + blk.fail_at[j] + 1;
          result.evaluations = evaluations + blk.evaluated_before[j];
          result.rate = negative_binomial_rate(result.failures, result.shots);
          const double k = static_cast<double>(result.failures);
          result.standard_error = result.rate * std::sqrt(std::max(0.0, 1.0 - result.rate) / (k - 1.0));
          return result;
        }
      }
      evaluations += blk.evaluated;
    }
    done_blocks += wave;
  }
  throw PartialResultError("Monte Carlo reached max_shots before stop_failures", options.max_shots, failures);
}

}  // namespace qecsplit
