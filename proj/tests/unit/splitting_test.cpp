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

#include <cmath>

#include <gtest/gtest.h>

#include "qecsplit/circuit.hpp"
#include "qecsplit/errors.hpp"
#include "qecsplit/fault_effects.hpp"
#include "qecsplit/noise.hpp"
#include "qecsplit/schedule.hpp"
#include "qecsplit/splitting.hpp"

namespace qecsplit {
namespace {

SplitOptions small_options() {
  SplitOptions o;
  o.chains = 4;
  o.min_chains_ok = 3;
  o.min_jumps = 3;
  o.min_samples = 20;
  o.rhat_target = 1.5;
  o.max_proposals = 400;
  o.seed = 9;
  o.setup.stop_failures = 10;
  o.setup.seed = 9;
  return o;
}

struct Bench {
  Bench() : circuit(build_rotated_surface_code(3, 6)), effects(circuit), noise(NoiseModel::uniform(circuit, 2e-3)) {}
  Circuit circuit;
  FaultEffectTable effects;
  NoiseModel noise;
};

TEST(SplittingTest, SinglePointIsMonteCarlo) {
  Bench s;
  const SplitReport r =
      run_splitting(s.circuit, s.effects, s.noise, Observable::kZ, explicit_schedule({2e-3}), small_options());
  EXPECT_TRUE(r.steps.empty());
  EXPECT_EQ(r.rate, r.setup.rate);
  EXPECT_EQ(r.rate_se, r.setup.standard_error);
  EXPECT_FALSE(r.partial);
  ASSERT_EQ(r.rates().size(), 1u);
}

TEST(SplittingTest, TelescopesRatios) {
  Bench s;
  const Schedule schedule = explicit_schedule({2e-3, 1.5e-3, 1e-3});
  const SplitReport r = run_splitting(s.circuit, s.effects, s.noise, Observable::kZ, schedule, small_options());
  ASSERT_EQ(r.steps.size(), 2u);
  ASSERT_EQ(r.levels.size(), 3u);
  double rate = r.setup.rate;
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const SplitStep& step = r.steps[i];
    EXPECT_EQ(step.p_from, schedule.points[i]);
    EXPECT_EQ(step.p_to, schedule.points[i + 1]);
    // Lowering p can only make a malignant set less likely.
    EXPECT_GT(step.ratio, 0.0);
    EXPECT_LT(step.ratio, 1.0);
    rate *= step.ratio;
    EXPECT_NEAR(step.rate / rate, 1.0, 1e-12);
    EXPECT_GT(step.ratio_se, 0.0);
    EXPECT_LE(step.jumps_min, step.jumps_max);
  }
  EXPECT_NEAR(r.rate / rate, 1.0, 1e-12);
  EXPECT_EQ(r.rates().back(), r.rate);
  EXPECT_EQ(r.cache_hits + r.cache_misses, r.steps[0].cache_hits + r.steps[0].cache_misses +
                                               r.steps[1].cache_hits + r.steps[1].cache_misses);
  EXPECT_LT(r.decoder_calls, r.proposals);
}

TEST(SplittingTest, ThreadCountDoesNotChangeReport) {
  Bench s;
  const Schedule schedule = explicit_schedule({2e-3, 1.4e-3});
  SplitOptions o = small_options();
  o.threads = 1;
  o.setup.threads = 1;
  const SplitReport a = run_splitting(s.circuit, s.effects, s.noise, Observable::kZ, schedule, o);
  o.threads = 3;
  o.setup.threads = 3;
  const SplitReport b = run_splitting(s.circuit, s.effects, s.noise, Observable::kZ, schedule, o);
  EXPECT_EQ(a.rate, b.rate);
  EXPECT_EQ(a.rate_se, b.rate_se);
  EXPECT_EQ(a.proposals, b.proposals);
  ASSERT_EQ(a.steps.size(), b.steps.size());
  EXPECT_EQ(a.steps[0].ratio, b.steps[0].ratio);
  EXPECT_EQ(a.levels[1].weights, b.levels[1].weights);
}

TEST(SplittingTest, ProposalCapFlagsPartial) {
  Bench s;
  SplitOptions o = small_options();
  o.min_jumps = 1000000;
  o.max_proposals = 20;
  const SplitReport r =
      run_splitting(s.circuit, s.effects, s.noise, Observable::kZ, explicit_schedule({2e-3, 1.5e-3}), o);
  EXPECT_TRUE(r.partial);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_FALSE(r.steps[0].converged);
  EXPECT_GT(r.rate, 0.0);
}

TEST(SplittingTest, RejectsBadOptions) {
  Bench s;
  SplitOptions o = small_options();
  o.chains = 1;
  EXPECT_THROW(run_splitting(s.circuit, s.effects, s.noise, Observable::kZ, explicit_schedule({2e-3}), o),
               InvalidParameter);
  o = small_options();
  o.min_chains_ok = 10;
  EXPECT_THROW(run_splitting(s.circuit, s.effects, s.noise, Observable::kZ, explicit_schedule({2e-3}), o),
               InvalidParameter);
}

TEST(SplittingTest, PerPointWeightsAgreeWithFrozen) {
  Bench s;
  const Schedule schedule = explicit_schedule({2e-3, 1.5e-3});
  SplitOptions o = small_options();
  o.min_samples = 100;
  o.min_jumps = 10;
  const SplitReport frozen = run_splitting(s.circuit, s.effects, s.noise, Observable::kZ, schedule, o);
  o.weights = WeightPolicy::kPerPoint;
  const SplitReport per_point = run_splitting(s.circuit, s.effects, s.noise, Observable::kZ, schedule, o);
  const double se = std::hypot(frozen.steps[0].ratio_se, per_point.steps[0].ratio_se);
  EXPECT_NEAR(frozen.steps[0].ratio, per_point.steps[0].ratio, 4.0 * se);
}

}  // namespace
}  // namespace qecsplit
