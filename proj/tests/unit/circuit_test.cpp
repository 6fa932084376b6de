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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "qecsplit/circuit.hpp"
#include "qecsplit/errors.hpp"
#include "qecsplit/event.hpp"
#include "qecsplit/noise.hpp"

namespace qecsplit {
namespace {

std::size_t overlap(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::size_t n = 0;
  for (std::uint32_t q : a) n += static_cast<std::size_t>(std::count(b.begin(), b.end(), q));
  return n;
}

TEST(CircuitTest, DistanceThreeCounts) {
  const Circuit c = build_rotated_surface_code(3, 6);
  EXPECT_EQ(c.data_qubits().size(), 9u);
  EXPECT_EQ(c.x_ancillas().size() + c.z_ancillas().size(), 8u);
  EXPECT_EQ(c.num_qubits(), 17u);
  std::size_t w4 = 0, w2 = 0;
  for (const Check& check : c.checks()) {
    if (check.weight() == 4) ++w4;
    if (check.weight() == 2) ++w2;
  }
  EXPECT_EQ(w4, 4u);
  EXPECT_EQ(w2, 4u);
  EXPECT_EQ(c.num_gates(), 240u);
  EXPECT_EQ(c.gates_per_round(), 40u);
}

TEST(CircuitTest, GateKindsPerRound) {
  const Circuit c = build_rotated_surface_code(3, 6);
  std::size_t prep = 0, cnot = 0, meas = 0;
  for (const Gate& g : c.gates()) {
    if (g.round != 2) continue;
    switch (g.kind) {
      case GateKind::kPrepZ:
      case GateKind::kPrepX: ++prep; break;
      case GateKind::kCnot: ++cnot; break;
      default: ++meas;
    }
  }
  EXPECT_EQ(prep, 8u);
  // 4 weight-4 checks and 4 weight-2 checks.
  EXPECT_EQ(cnot, 4u * 4u + 4u * 2u);
  EXPECT_EQ(meas, 8u);
}

TEST(CircuitTest, DistanceFiveCounts) {
  const Circuit c = build_rotated_surface_code(5, 10);
  EXPECT_EQ(c.data_qubits().size(), 25u);
  EXPECT_EQ(c.x_ancillas().size() + c.z_ancillas().size(), 24u);
  EXPECT_EQ(c.num_detectors(), 10u * 24u);
  EXPECT_EQ(c.num_measurements(), 10u * 24u);
}

TEST(CircuitTest, RejectsBadParameters) {
  EXPECT_THROW(build_rotated_surface_code(4, 3), InvalidParameter);
  EXPECT_THROW(build_rotated_surface_code(1, 3), InvalidParameter);
  EXPECT_THROW(build_rotated_surface_code(3, 0), InvalidParameter);
  EXPECT_THROW(parse_observable("Y"), InvalidParameter);
}

class CircuitInvariants : public ::testing::TestWithParam<int> {};

TEST_P(CircuitInvariants, StabilizersCommute) {
  const Circuit c = build_rotated_surface_code(GetParam(), 2);
  for (const Check& a : c.checks()) {
    for (const Check& b : c.checks()) {
      if (a.type != b.type) {
        EXPECT_EQ(overlap(a.support, b.support) % 2, 0u);
      }
    }
  }
  for (const Check& a : c.checks()) {
    // X_L must commute with Z checks and Z_L with X checks.
    const auto& logical = a.type == CheckType::kZ ? c.logical_x() : c.logical_z();
    EXPECT_EQ(overlap(a.support, logical) % 2, 0u);
  }
  EXPECT_EQ(overlap(c.logical_x(), c.logical_z()), 1u);
  EXPECT_EQ(c.logical_x().size(), static_cast<std::size_t>(GetParam()));
}

TEST_P(CircuitInvariants, NoQubitUsedTwicePerTimestep) {
  const Circuit c = build_rotated_surface_code(GetParam(), 3);
  std::map<std::uint32_t, std::set<std::uint32_t>> used;
  for (const Gate& g : c.gates()) {
    for (std::size_t k = 0; k < g.arity(); ++k) {
      EXPECT_TRUE(used[g.timestep].insert(g.qubits[k]).second)
          << "qubit " << g.qubits[k] << " twice at timestep " << g.timestep;
    }
    EXPECT_EQ(g.timestep / 6, g.round);
  }
}

TEST_P(CircuitInvariants, ChecksCoverEachDataQubit) {
  const int d = GetParam();
  const Circuit c = build_rotated_surface_code(d, 1);
  for (std::uint32_t q : c.data_qubits()) {
    std::size_t nx = 0, nz = 0;
    for (const Check& check : c.checks()) {
      const bool in = std::count(check.support.begin(), check.support.end(), q) > 0;
      (check.type == CheckType::kX ? nx : nz) += in;
    }
    EXPECT_GE(nx, 1u);
    EXPECT_LE(nx, 2u);
    EXPECT_GE(nz, 1u);
    EXPECT_LE(nz, 2u);
  }
  EXPECT_EQ(c.num_checks(), static_cast<std::size_t>(d * d - 1));
}

TEST_P(CircuitInvariants, DetectorsCompareConsecutiveRounds) {
  const Circuit c = build_rotated_surface_code(GetParam(), 4);
  for (std::uint32_t r = 0; r < c.rounds(); ++r) {
    for (std::uint32_t k = 0; k < c.num_checks(); ++k) {
      const DetectorDef& det = c.detectors()[c.detector_index(k, r)];
      EXPECT_EQ(det.check, k);
      EXPECT_EQ(det.round, r);
      const Gate& m = c.gate(c.measurement_gates()[det.record]);
      EXPECT_EQ(m.check, k);
      EXPECT_EQ(m.round, r);
      if (r == 0) {
        EXPECT_EQ(det.previous_record, -1);
      } else {
        const Gate& prev = c.gate(c.measurement_gates()[static_cast<std::size_t>(det.previous_record)]);
        EXPECT_EQ(prev.check, k);
        EXPECT_EQ(prev.round, r - 1);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Distances, CircuitInvariants, ::testing::Values(3, 5, 7));

TEST(CircuitTest, SerializationIsStable) {
  const Circuit a = build_rotated_surface_code(3, 2);
  const Circuit b = build_rotated_surface_code(3, 2);
  const std::string text = serialize_circuit(a);
  EXPECT_EQ(text, serialize_circuit(b));
  EXPECT_GE(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), a.num_gates());
}

TEST(NoiseTest, FaultBases) {
  EXPECT_EQ(fault_count(GateKind::kCnot), 15u);
  EXPECT_EQ(fault_count(GateKind::kMeasZ), 1u);
  EXPECT_EQ(fault_count(GateKind::kPrepZ), 1u);
  double total = 0.0;
  for (const FaultOption& f : enumerate_faults(GateKind::kCnot)) {
    EXPECT_DOUBLE_EQ(f.probability, 1.0 / 15.0);
    total += f.probability;
  }
  EXPECT_NEAR(total, 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(enumerate_faults(GateKind::kMeasZ).at(0).probability, 1.0);
  std::set<std::uint8_t> codes;
  for (std::size_t i = 0; i < 15; ++i) codes.insert(fault_label_at(GateKind::kCnot, i).code);
  EXPECT_EQ(codes.size(), 15u);
  EXPECT_EQ(codes.count(0), 0u);
}

TEST(NoiseTest, RejectsCertainFailure) {
  const Circuit c = build_rotated_surface_code(3, 1);
  EXPECT_THROW(NoiseModel::uniform(c, 1.0), InvalidParameter);
  EXPECT_THROW(NoiseModel::uniform(c, -0.1), InvalidParameter);
  const NoiseModel n = NoiseModel::uniform(c, 0.5);
  EXPECT_THROW(n.with_gate_multiplier(0, 2.0), InvalidParameter);
}

TEST(NoiseTest, ColumnMultiplier) {
  const Circuit c = build_rotated_surface_code(3, 2);
  const NoiseModel base = NoiseModel::uniform(c, 1e-3);
  const NoiseModel scaled = base.with_column_multiplier(c, 0, 5.0);
  std::size_t changed = 0;
  for (std::uint32_t g = 0; g < c.num_gates(); ++g) {
    const double ratio = scaled.failure_probability(g) / base.failure_probability(g);
    EXPECT_TRUE(std::abs(ratio - 1.0) < 1e-12 || std::abs(ratio - 5.0) < 1e-12);
    changed += ratio > 1.5;
  }
  EXPECT_GT(changed, 0u);
  EXPECT_FALSE(scaled.is_uniform());
  EXPECT_DOUBLE_EQ(scaled.at(1e-4).failure_probability(c.num_gates() - 1) /
                       base.at(1e-4).failure_probability(c.num_gates() - 1),
                   scaled.failure_probability(c.num_gates() - 1) / base.failure_probability(c.num_gates() - 1));
}

TEST(EventTest, CanonicalOrderAndDuplicates) {
  const Event a = Event::from_pairs({{7, {1}}, {3, {2}}});
  const Event b = Event::from_pairs({{3, {2}}, {7, {1}}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.key(), b.key());
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_THROW(Event::from_pairs({{3, {1}}, {3, {2}}}), InvalidEvent);
  Event e = a;
  e.set({3, {5}});
  EXPECT_EQ(e.fault_at(3)->code, 5);
  EXPECT_TRUE(e.erase(3));
  EXPECT_FALSE(e.erase(3));
  EXPECT_EQ(e.size(), 1u);
}

TEST(EventTest, ValidatesAgainstCircuit) {
  const Circuit c = build_rotated_surface_code(3, 1);
  std::uint32_t meas = c.measurement_gates()[0];
  EXPECT_THROW(validate_event(Event::from_pairs({{meas, {2}}}), c), InvalidEvent);
  EXPECT_THROW(validate_event(Event::from_pairs({{static_cast<std::uint32_t>(c.num_gates()), {1}}}), c),
               InvalidEvent);
  EXPECT_NO_THROW(validate_event(Event::from_pairs({{meas, {1}}}), c));
}

TEST(EventTest, LogProbability) {
  const Circuit c = build_rotated_surface_code(3, 6);
  const NoiseModel n = NoiseModel::uniform(c, 1e-3);
  const double empty = event_log_probability(Event{}, n);
  EXPECT_NEAR(empty, 240.0 * std::log1p(-1e-3), 1e-12);

  std::uint32_t cnot = 0;
  while (c.gate(cnot).kind != GateKind::kCnot) ++cnot;
  const Event one = Event::from_pairs({{cnot, {6}}});
  const double direct = std::exp(event_log_probability(one, n) - empty);
  EXPECT_NEAR(direct, (1e-3 / 0.999) / 15.0, 1e-15);
  EXPECT_NEAR(direct, 6.673e-5, 1e-8);
  EXPECT_NEAR(std::exp(log_insertion_ratio(n, cnot, {6})), direct, 1e-15);
  EXPECT_EQ(event_log_probability(one, n) - event_log_probability(one, n), 0.0);
}

}  // namespace
}  // namespace qecsplit
