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

#include <vector>

#include <benchmark/benchmark.h>

#include "qecsplit/chain.hpp"
#include "qecsplit/circuit.hpp"
#include "qecsplit/decoder.hpp"
#include "qecsplit/failure_cache.hpp"
#include "qecsplit/fault_effects.hpp"
#include "qecsplit/malignancy.hpp"
#include "qecsplit/monte_carlo.hpp"
#include "qecsplit/noise.hpp"
#include "qecsplit/pauli.hpp"

namespace qecsplit {
namespace {

struct Setup {
  explicit Setup(int d)
      : circuit(build_rotated_surface_code(d, 2 * d)),
        effects(circuit),
        noise(NoiseModel::uniform(circuit, 1e-3)),
        oracle(circuit, effects, noise, Observable::kZ) {}
  Circuit circuit;
  FaultEffectTable effects;
  NoiseModel noise;
  MalignancyOracle oracle;
};

std::vector<Event> weight_k_events(const Setup& s, std::size_t k, std::size_t n) {
  const FaultSampler sampler(s.noise);
  Rng rng(1);
  std::vector<Event> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(sampler.sample_weight(k, rng));
  return out;
}

void BM_Propagate(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  const auto events = weight_k_events(s, 4, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(propagate(s.circuit, events[i++ % events.size()]));
}
BENCHMARK(BM_Propagate)->Arg(3)->Arg(5)->Arg(7);

void BM_TableSyndrome(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  const auto events = weight_k_events(s, 4, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(s.effects.syndrome(events[i++ % events.size()]));
}
BENCHMARK(BM_TableSyndrome)->Arg(3)->Arg(5)->Arg(7);

void BM_Decode(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Circuit c = build_rotated_surface_code(d, 2 * d);
  const Decoder decoder(build_decoding_graph(c, NoiseModel::uniform(c, 1e-3), Observable::kZ));
  Rng rng(2);
  std::vector<std::vector<std::uint32_t>> instances;
  for (int i = 0; i < 256; ++i) {
    std::vector<std::uint32_t> v;
    for (std::uint32_t x = 0; x < decoder.graph().num_vertices(); ++x) {
      if (rng() % decoder.graph().num_vertices() < static_cast<std::uint64_t>(state.range(1))) v.push_back(x);
    }
    instances.push_back(std::move(v));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decoder.decode(instances[i++ % instances.size()]));
}
BENCHMARK(BM_Decode)->Args({3, 4})->Args({5, 8})->Args({7, 12});

void BM_Oracle(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  const auto events = weight_k_events(s, static_cast<std::size_t>(state.range(1)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(s.oracle.is_malignant(events[i++ % events.size()]));
}
BENCHMARK(BM_Oracle)->Args({3, 2})->Args({5, 3})->Args({7, 4});

void BM_MetropolisStep(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  const FailureCache cache(s.oracle);
  McOptions options;
  options.stop_failures = 2;
  options.harvest = 1;
  const McResult mc = mc_estimate(s.noise.at(3e-3), s.oracle, options);
  ChainState chain{mc.harvested.front(), Rng(3)};
  for (auto _ : state) benchmark::DoNotOptimize(metropolis_step(chain, s.noise, cache));
  state.counters["hit_rate"] = static_cast<double>(cache.hits()) / static_cast<double>(cache.hits() + cache.misses());
}
BENCHMARK(BM_MetropolisStep)->Arg(3)->Arg(5);

}  // namespace
}  // namespace qecsplit

BENCHMARK_MAIN();
