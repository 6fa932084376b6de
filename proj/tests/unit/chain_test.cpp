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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qecsplit/bennett.hpp"
#include "qecsplit/chain.hpp"
#include "qecsplit/circuit.hpp"
#include "qecsplit/diagnostics.hpp"
#include "qecsplit/errors.hpp"
#include "qecsplit/event.hpp"
#include "qecsplit/malignancy.hpp"
#include "qecsplit/monte_carlo.hpp"
#include "qecsplit/noise.hpp"
#include "qecsplit/schedule.hpp"

namespace qecsplit {
namespace {

class Constant : public EventClassifier {
 public:
  explicit Constant(bool value) : value_(value) {}
  bool is_malignant(const Event&) const override { return value_; }

 private:
  bool value_;
};

// Proposal that undoes `p` once it has been applied to `before`.
Proposal reverse_of(const Event& before, const Proposal& p) {
  const auto old = before.fault_at(p.gate);
  if (!old) return p;                         // insert <- delete
  if (*old == p.fault) return p;              // delete <- insert
  return Proposal{p.gate, *old};              // replace <- replace
}

NoiseModel skewed_noise(const Circuit& c, double p) {
  std::vector<double> cnot(15);
  double total = 0.0;
  for (std::size_t i = 0; i < 15; ++i) total += (cnot[i] = 1.0 + static_cast<double>(i));
  for (double& v : cnot) v /= total;
  // Force an exact sum of one for the validator.
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < 15; ++i) sum += cnot[i];
  cnot[14] = 1.0 - sum;
  return NoiseModel::uniform(c, p).with_column_multiplier(c, 0, 5.0).with_fault_distribution(GateKind::kCnot, cnot);
}

TEST(ChainTest, InsertionAcceptance) {
  const Circuit c = build_rotated_surface_code(3, 6);
  const NoiseModel noise = NoiseModel::uniform(c, 1e-3);
  std::uint32_t cnot = 0;
  while (c.gate(cnot).kind != GateKind::kCnot) ++cnot;
  const Proposal p{cnot, {5}};
  EXPECT_EQ(move_kind(Event{}, p), MoveKind::kInsert);
  EXPECT_NEAR(acceptance_probability(Event{}, p, noise), (1e-3 / 0.999) / 15.0, 1e-18);
  EXPECT_NEAR(acceptance_probability(Event{}, p, noise), 6.673e-5, 1e-8);
  const Event one = apply_proposal(Event{}, p);
  EXPECT_EQ(move_kind(one, p), MoveKind::kDelete);
  EXPECT_DOUBLE_EQ(acceptance_probability(one, p, noise), 1.0);
  EXPECT_TRUE(apply_proposal(one, p).empty());
}

TEST(ChainTest, UniformReplacementAlwaysAccepted) {
  const Circuit c = build_rotated_surface_code(3, 6);
  const NoiseModel noise = NoiseModel::uniform(c, 1e-3);
  std::uint32_t cnot = 0;
  while (c.gate(cnot).kind != GateKind::kCnot) ++cnot;
  const Event e = Event::from_pairs({{cnot, {5}}});
  const Proposal p{cnot, {9}};
  EXPECT_EQ(move_kind(e, p), MoveKind::kReplace);
  EXPECT_DOUBLE_EQ(acceptance_probability(e, p, noise), 1.0);
  EXPECT_EQ(apply_proposal(e, p).fault_at(cnot)->code, 9);
}

TEST(ChainTest, ProposalProbability) {
  const Circuit c = build_rotated_surface_code(3, 6);
  const NoiseModel noise = NoiseModel::uniform(c, 1e-3);
  std::uint32_t cnot = 0;
  while (c.gate(cnot).kind != GateKind::kCnot) ++cnot;
  EXPECT_DOUBLE_EQ(proposal_probability(noise, {cnot, {1}}), 1.0 / 240.0 / 15.0);
  EXPECT_DOUBLE_EQ(proposal_probability(noise, {0, {1}}), 1.0 / 240.0);
  std::mt19937_64 rng(1);
  std::vector<int> hits(240, 0);
  for (int i = 0; i < 240000; ++i) {
    const Proposal p = draw_proposal(noise, rng);
    ASSERT_TRUE(is_valid_fault(c.gate(p.gate).kind, p.fault));
    ++hits[p.gate];
  }
  for (int h : hits) EXPECT_NEAR(h, 1000, 160);
}

TEST(ChainTest, DetailedBalance) {
  const Circuit c = build_rotated_surface_code(3, 6);
  const NoiseModel noise = skewed_noise(c, 2e-3);
  const FaultSampler sampler(noise);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10000; ++trial) {
    const Event e = sampler.sample_weight(trial % 5, rng);
    const Proposal p = draw_proposal(noise, rng);
    const Event next = apply_proposal(e, p);
    const Proposal back = reverse_of(e, p);
    ASSERT_EQ(apply_proposal(next, back), e);
    const double forward = std::exp(event_log_probability(e, noise)) * proposal_probability(noise, p) *
                           acceptance_probability(e, p, noise);
    const double backward = std::exp(event_log_probability(next, noise)) * proposal_probability(noise, back) *
                            acceptance_probability(next, back, noise);
    ASSERT_NEAR(forward / backward, 1.0, 1e-10) << e.to_string() << " -> " << next.to_string();
  }
}

TEST(ChainTest, BenignProposalKeepsEvent) {
  const Circuit c = build_rotated_surface_code(3, 6);
  // A large rate makes insertions likely to be accepted.
  const NoiseModel noise = NoiseModel::uniform(c, 0.4);
  const Constant never(false);
  ChainState chain{Event::from_pairs({{4, {1}}}), Rng(3)};
  const Event start = chain.event;
  for (int i = 0; i < 1000; ++i) EXPECT_NE(metropolis_step(chain, noise, never), StepOutcome::kJump);
  EXPECT_EQ(chain.event, start);
  EXPECT_EQ(chain.steps, 1000u);
  EXPECT_EQ(chain.jumps, 0u);
  EXPECT_GT(chain.accepted, 0u);
}

TEST(ChainTest, UnrestrictedChainSamplesNoiseModel) {
  // With every event malignant the chain targets pi itself, so the mean
  // weight must approach the sum of gate failure probabilities.
  const Circuit c = build_rotated_surface_code(3, 1);
  const NoiseModel noise = NoiseModel::uniform(c, 0.05);
  const Constant always(true);
  ChainState chain{Event{}, Rng(4)};
  double total = 0.0;
  const int samples = 20000;
  for (int i = 0; i < 200 * static_cast<int>(c.num_gates()); ++i) metropolis_step(chain, noise, always);
  for (int s = 0; s < samples; ++s) {
    for (std::size_t k = 0; k < c.num_gates(); ++k) metropolis_step(chain, noise, always);
    total += static_cast<double>(chain.event.size());
  }
  EXPECT_NEAR(total / samples, 0.05 * static_cast<double>(c.num_gates()), 0.1);
  EXPECT_EQ(chain.jumps, chain.accepted);
}

TEST(BennettTest, GIdentity) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> log_x(-30.0, 30.0);
  for (int i = 0; i < 1000000; ++i) {
    const double x = std::exp(log_x(rng));
    ASSERT_NEAR(bennett_g(x), bennett_g(1.0 / x) / x, 1e-12 * bennett_g(x));
  }
}

TEST(BennettTest, ConstantRatio) {
  for (double r : {1e-3, 0.37, 1.0, 4.2, 1e5}) {
    const std::vector<double> side_i(50, std::log(r));
    const std::vector<double> side_next(70, std::log(r));
    const BennettResult res = bennett_solve(side_i, side_next);
    EXPECT_NEAR(res.ratio / r, 1.0, 1e-10) << r;
  }
}

TEST(BennettTest, TwoPointClosedForm) {
  // One sample per side: 1/(1 + C e^-a) = 1/(1 + e^b / C), so C = e^((a+b)/2).
  const double a = -1.3, b = -0.4;
  const std::vector<double> side_i{a};
  const std::vector<double> side_next{b};
  EXPECT_NEAR(bennett_solve(side_i, side_next).log_ratio, 0.5 * (a + b), 1e-9);
}

TEST(BennettTest, ThreePointCubicRoot) {
  // Two samples on side i and one on side i+1 reduce to
  //   u^3 + (S/2) u^2 - (B S / 2) u - B P = 0
  // with A_k = e^{a_k}, S = A1 + A2, P = A1 A2, B = e^b; one positive root.
  const double a1 = -2.0, a2 = -0.5, b = -1.0;
  const long double A1 = std::exp(static_cast<long double>(a1));
  const long double A2 = std::exp(static_cast<long double>(a2));
  const long double B = std::exp(static_cast<long double>(b));
  const long double S = A1 + A2, P = A1 * A2;
  long double u = 10.0L;
  for (int i = 0; i < 200; ++i) {
    const long double f = u * u * u + S / 2 * u * u - B * S / 2 * u - B * P;
    const long double df = 3 * u * u + S * u - B * S / 2;
    u -= f / df;
  }
  const std::vector<double> side_i{a1, a2};
  const std::vector<double> side_next{b};
  EXPECT_NEAR(bennett_solve(side_i, side_next).ratio / static_cast<double>(u), 1.0, 1e-9);
}

TEST(BennettTest, SignChangesAtRoot) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> side_i, side_next;
  for (int i = 0; i < 500; ++i) side_i.push_back(-2.0 + noise(rng));
  for (int i = 0; i < 400; ++i) side_next.push_back(-1.0 + noise(rng));
  const BennettResult res = bennett_solve(side_i, side_next);
  auto f = [&](double log_c) {
    double rhs = 0.0;
    for (double l : side_next) rhs += 1.0 / (1.0 + std::exp(l - log_c));
    return bennett_side_mean(side_i, log_c) - rhs / static_cast<double>(side_next.size());
  };
  EXPECT_GT(f(res.log_ratio - 1e-3), 0.0);
  EXPECT_LT(f(res.log_ratio + 1e-3), 0.0);
  EXPECT_NEAR(f(res.log_ratio), 0.0, 1e-9);
}

TEST(BennettTest, Errors) {
  const std::vector<double> some{0.1};
  EXPECT_THROW(bennett_solve({}, some), InvalidParameter);
  EXPECT_THROW(bennett_solve(some, {}), InvalidParameter);
  const std::vector<double> huge{900.0};
  EXPECT_THROW(bennett_solve(huge, huge), NumericalError);
}

double reference_rhat(const std::vector<std::vector<double>>& chains) {
  const double m = static_cast<double>(chains.size());
  const double n = static_cast<double>(chains[0].size());
  std::vector<double> means;
  double grand = 0.0;
  for (const auto& c : chains) {
    double s = 0.0;
    for (double v : c) s += v;
    means.push_back(s / n);
    grand += s / n;
  }
  grand /= m;
  double b = 0.0, w = 0.0;
  for (std::size_t j = 0; j < chains.size(); ++j) {
    b += (means[j] - grand) * (means[j] - grand);
    double s2 = 0.0;
    for (double v : chains[j]) s2 += (v - means[j]) * (v - means[j]);
    w += s2 / (n - 1.0);
  }
  b *= n / (m - 1.0);
  w /= m;
  return std::sqrt(((n - 1.0) / n * w + b / n) / w);
}

TEST(DiagnosticsTest, IdenticalChains) {
  const std::vector<double> chain{1.0, 3.0, 2.0, 5.0, 4.0};
  const std::vector<std::vector<double>> chains(4, chain);
  EXPECT_NEAR(gelman_rubin(chains), std::sqrt(4.0 / 5.0), 1e-6);
}

TEST(DiagnosticsTest, MatchesReferenceFormula) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<double>> chains(5);
    for (std::size_t j = 0; j < chains.size(); ++j) {
      for (int i = 0; i < 200; ++i) chains[j].push_back(normal(rng) + 0.1 * static_cast<double>(j * trial));
    }
    EXPECT_NEAR(gelman_rubin(chains), reference_rhat(chains), 1e-10);
  }
}

TEST(DiagnosticsTest, ZeroWithinVarianceIsUndefined) {
  const std::vector<std::vector<double>> chains{{1.0, 1.0, 1.0}, {2.0, 2.0, 2.0}};
  EXPECT_THROW(gelman_rubin(chains), NumericalError);
  EXPECT_THROW(gelman_rubin({{1.0, 2.0}}), InvalidParameter);
}

TEST(DiagnosticsTest, JackknifeOfMean) {
  const std::vector<double> x{2.0, 4.0, 7.0, 1.0, 9.0, 3.0};
  const auto n = x.size();
  auto mean_without = [&](std::size_t skip) {
    double s = 0.0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == skip) continue;
      s += x[i];
      ++k;
    }
    return s / static_cast<double>(k);
  };
  const JackknifeResult r = jackknife(n, mean_without);
  double mean = 0.0, var = 0.0;
  for (double v : x) mean += v / static_cast<double>(n);
  for (double v : x) var += (v - mean) * (v - mean) / static_cast<double>(n - 1);
  EXPECT_NEAR(r.estimate, mean, 1e-12);
  EXPECT_NEAR(r.standard_error, std::sqrt(var / static_cast<double>(n)), 1e-12);
}

TEST(DiagnosticsTest, HistogramMode) {
  const Histogram h{{2, 5}, {3, 9}, {4, 9}, {5, 1}};
  EXPECT_EQ(histogram_mode(h), 3u);
}

TEST(ScheduleTest, StepFromCensus) {
  // p * census = 4 at the start point.
  const Schedule s = generate_schedule(1e-3, 1e-4, 3, 4000.0);
  ASSERT_GE(s.size(), 3u);
  EXPECT_NEAR(s.points[1], 1e-3 * std::pow(2.0, -0.5), 1e-15);
  EXPECT_NEAR(s.points[1], 7.071e-4, 1e-7);
  EXPECT_DOUBLE_EQ(s.w[0], 4.0);
  EXPECT_DOUBLE_EQ(s.points.back(), 1e-4);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s.points[i], s.points[i - 1]);
}

TEST(ScheduleTest, ClampedStepIsConstant) {
  const Schedule s = generate_schedule(1e-3, 1e-5, 5, 240.0);
  const double ratio = std::pow(2.0, -1.0 / std::sqrt(2.5));
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    EXPECT_NEAR(s.points[i] / s.points[i - 1], ratio, 1e-12);
    EXPECT_DOUBLE_EQ(s.w[i - 1], 2.5);
  }
  // The final step is clamped to the target, so it is never longer.
  EXPECT_GE(s.points.back() / s.points[s.size() - 2], ratio - 1e-12);
}

TEST(ScheduleTest, Variants) {
  const Schedule base = generate_schedule(1e-3, 1e-4, 3, 240.0);
  const std::size_t n = base.size();
  const Schedule ends = apply_variant(base, ScheduleVariant::kEndpoints);
  EXPECT_EQ(ends.points, (std::vector<double>{base.points.front(), base.points.back()}));
  const Schedule other = apply_variant(base, ScheduleVariant::kEveryOther);
  EXPECT_EQ(other.size(), (n - 1 + 1) / 2 + 1);
  EXPECT_EQ(other.points.back(), base.points.back());
  const Schedule twice = apply_variant(base, ScheduleVariant::kTwice);
  EXPECT_EQ(twice.size(), 2 * n - 1);
  EXPECT_NEAR(twice.points[1], std::sqrt(base.points[0] * base.points[1]), 1e-18);
  for (auto v : {ScheduleVariant::kDefault, ScheduleVariant::kEveryOther, ScheduleVariant::kEveryFourth,
                 ScheduleVariant::kEndpoints, ScheduleVariant::kTwice}) {
    EXPECT_EQ(parse_schedule_variant(schedule_variant_name(v)), v);
  }
  EXPECT_THROW(parse_schedule_variant("sometimes"), InvalidParameter);
  EXPECT_THROW(explicit_schedule({1e-4, 1e-3}), InvalidParameter);
  EXPECT_THROW(generate_schedule(1e-4, 1e-3, 3, 240.0), InvalidParameter);
}

}  // namespace
}  // namespace qecsplit
