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


#ifndef QECSPLIT_NOISE_HPP_
#define QECSPLIT_NOISE_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qecsplit/circuit.hpp"

namespace qecsplit {

enum class Pauli : std::uint8_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

// A non-identity fault on one gate. CNOT labels encode the Pauli applied after
// the gate as 4 * P_control + P_target (1..15). Preparations and measurements
// have the single label 1: the orthogonal state for a preparation, a flipped
// record for a measurement.
struct FaultLabel {
  std::uint8_t code = 1;

  friend bool operator==(FaultLabel, FaultLabel) = default;
  friend auto operator<=>(FaultLabel, FaultLabel) = default;
};

std::size_t fault_count(GateKind kind);
// index in [0, fault_count(kind)) -> label; and back.
FaultLabel fault_label_at(GateKind kind, std::size_t index);
std::size_t fault_index(GateKind kind, FaultLabel label);
bool is_valid_fault(GateKind kind, FaultLabel label);
std::string fault_label_name(GateKind kind, FaultLabel label);

inline Pauli cnot_control_pauli(FaultLabel f) { return static_cast<Pauli>(f.code >> 2); }
inline Pauli cnot_target_pauli(FaultLabel f) { return static_cast<Pauli>(f.code & 3); }

struct FaultOption {
  FaultLabel label;
  double probability = 0.0;
};

// Default fault basis with its conditional probabilities.
std::vector<FaultOption> enumerate_faults(GateKind kind);

// Per-gate failure probabilities pr_g = multiplier_g * p and per-kind
// conditional fault distributions. Immutable once built.
class NoiseModel {
 public:
  // Every gate fails with probability p.
  static NoiseModel uniform(const Circuit& circuit, double p);

  // Same multipliers and conditionals, new base rate.
  NoiseModel at(double p) const;
  // Scales every gate touching an ancilla whose plaquette column is `column`.
  NoiseModel with_column_multiplier(const Circuit& circuit, int column, double factor) const;
  NoiseModel with_gate_multiplier(std::uint32_t gate, double factor) const;
  // Replaces the conditional distribution of `kind` (indexed like fault_label_at).
  NoiseModel with_fault_distribution(GateKind kind, std::vector<double> probabilities) const;

  double p() const { return p_; }
  std::size_t num_gates() const { return kinds_.size(); }
  GateKind kind(std::uint32_t gate) const { return kinds_[gate]; }
  double multiplier(std::uint32_t gate) const { return multipliers_[gate]; }
  double failure_probability(std::uint32_t gate) const { return pr_[gate]; }
  std::span<const double> failure_probabilities() const { return pr_; }
  double conditional(GateKind kind, FaultLabel f) const;
  double conditional(std::uint32_t gate, FaultLabel f) const { return conditional(kinds_[gate], f); }
  std::span<const double> distribution(GateKind kind) const {
    return conditional_[static_cast<std::size_t>(kind)];
  }
  // Σ_g log(1 - pr_g).
  double log_no_fault() const { return log_no_fault_; }
  // All multipliers equal to one.
  bool is_uniform() const;

 private:
  NoiseModel() = default;
  void refresh();

  double p_ = 0.0;
  std::vector<GateKind> kinds_;
  std::vector<double> multipliers_;
  std::vector<double> pr_;
  std::array<std::vector<double>, kNumGateKinds> conditional_;
  double log_no_fault_ = 0.0;
};

}  // namespace qecsplit

#endif  // QECSPLIT_NOISE_HPP_
