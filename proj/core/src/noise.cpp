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


#include "qecsplit/noise.hpp"

#include <cmath>
#include <string>

#include "qecsplit/errors.hpp"

namespace qecsplit {

namespace {

constexpr char kPauliChar[] = {'I', 'X', 'Y', 'Z'};

std::vector<double> default_distribution(GateKind kind) {
  const std::size_t n = fault_count(kind);
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

}  // namespace

std::size_t fault_count(GateKind kind) { return kind == GateKind::kCnot ? 15 : 1; }

FaultLabel fault_label_at(GateKind kind, std::size_t index) {
  if (index >= fault_count(kind)) throw InvalidParameter("fault index out of range");
  return FaultLabel{static_cast<std::uint8_t>(index + 1)};
}

std::size_t fault_index(GateKind kind, FaultLabel label) {
  if (!is_valid_fault(kind, label)) throw InvalidEvent("fault label incompatible with gate kind");
  return label.code - 1u;
}

bool is_valid_fault(GateKind kind, FaultLabel label) {
  return label.code >= 1 && label.code <= fault_count(kind);
}

std::string fault_label_name(GateKind kind, FaultLabel label) {
  if (!is_valid_fault(kind, label)) return "?";
  switch (kind) {
    case GateKind::kCnot:
      return {kPauliChar[label.code >> 2], kPauliChar[label.code & 3]};
    case GateKind::kPrepZ:
      return "X";
    case GateKind::kPrepX:
      return "Z";
    case GateKind::kMeasZ:
    case GateKind::kMeasX:
      return "FLIP";
  }
  return "?";
}

std::vector<FaultOption> enumerate_faults(GateKind kind) {
  const auto dist = default_distribution(kind);
  std::vector<FaultOption> out;
  for (std::size_t i = 0; i < dist.size(); ++i) out.push_back({fault_label_at(kind, i), dist[i]});
  return out;
}

NoiseModel NoiseModel::uniform(const Circuit& circuit, double p) {
  NoiseModel m;
  m.p_ = p;
  m.kinds_.reserve(circuit.num_gates());
  for (const Gate& g : circuit.gates()) m.kinds_.push_back(g.kind);
  m.multipliers_.assign(circuit.num_gates(), 1.0);
  for (std::size_t k = 0; k < kNumGateKinds; ++k) {
    m.conditional_[k] = default_distribution(static_cast<GateKind>(k));
  }
  m.refresh();
  return m;
}

NoiseModel NoiseModel::at(double p) const {
  NoiseModel m = *this;
  m.p_ = p;
  m.refresh();
  return m;
}

NoiseModel NoiseModel::with_column_multiplier(const Circuit& circuit, int column, double factor) const {
  if (!(factor >= 0.0)) throw InvalidParameter("region multiplier must be non-negative");
  NoiseModel m = *this;
  for (const Gate& g : circuit.gates()) {
    if (g.check == kNoCheck) continue;
    if (circuit.checks()[g.check].col == column) m.multipliers_[g.id] *= factor;
  }
  m.refresh();
  return m;
}

NoiseModel NoiseModel::with_gate_multiplier(std::uint32_t gate, double factor) const {
  if (gate >= kinds_.size()) throw InvalidParameter("gate id out of range");
  if (!(factor >= 0.0)) throw InvalidParameter("gate multiplier must be non-negative");
  NoiseModel m = *this;
  m.multipliers_[gate] *= factor;
  m.refresh();
  return m;
}

NoiseModel NoiseModel::with_fault_distribution(GateKind kind, std::vector<double> probabilities) const {
  if (probabilities.size() != fault_count(kind)) {
    throw InvalidParameter("fault distribution has wrong size for " + std::string(gate_kind_name(kind)));
  }
  double total = 0.0;
  for (double v : probabilities) {
    if (!(v >= 0.0)) throw InvalidParameter("fault probabilities must be non-negative");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidParameter("fault probabilities must sum to 1");
  NoiseModel m = *this;
  m.conditional_[static_cast<std::size_t>(kind)] = std::move(probabilities);
  return m;
}

double NoiseModel::conditional(GateKind kind, FaultLabel f) const {
  return conditional_[static_cast<std::size_t>(kind)][fault_index(kind, f)];
}

bool NoiseModel::is_uniform() const {
  for (double m : multipliers_) {
    if (m != 1.0) return false;
  }
  return true;
}

void NoiseModel::refresh() {
  if (!(p_ >= 0.0 && p_ < 1.0)) throw InvalidParameter("physical error rate must lie in [0, 1)");
  pr_.resize(multipliers_.size());
  log_no_fault_ = 0.0;
  for (std::size_t g = 0; g < multipliers_.size(); ++g) {
    const double pr = multipliers_[g] * p_;
    if (!(pr < 1.0)) {
      throw InvalidParameter("gate " + std::to_string(g) + " failure probability must be < 1");
    }
    pr_[g] = pr;
    log_no_fault_ += std::log1p(-pr);
  }
}

}  // namespace qecsplit
