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


#include "qecsplit/pauli.hpp"

#include <sstream>

#include "qecsplit/errors.hpp"

namespace qecsplit {

namespace {

void apply_pauli(PauliFrame& frame, std::uint32_t q, Pauli p) {
  const auto bits = static_cast<std::uint8_t>(p);
  // X=1, Y=2, Z=3: X component set for X and Y, Z component for Y and Z.
  frame.x[q] ^= static_cast<std::uint8_t>(bits == 1 || bits == 2);
  frame.z[q] ^= static_cast<std::uint8_t>(bits == 2 || bits == 3);
}

}  // namespace

PauliFrame simulate_frame(const Circuit& circuit, const Event& event) {
  validate_event(event, circuit);
  PauliFrame frame;
  frame.x.assign(circuit.num_qubits(), 0);
  frame.z.assign(circuit.num_qubits(), 0);
  frame.record_flips.reserve(circuit.num_measurements());

  auto pairs = event.pairs();
  std::size_t next = 0;
  for (const Gate& g : circuit.gates()) {
    const bool faulty = next < pairs.size() && pairs[next].gate == g.id;
    const FaultLabel f = faulty ? pairs[next].fault : FaultLabel{};
    if (faulty) ++next;
    const std::uint32_t q = g.qubits[0];
    switch (g.kind) {
      case GateKind::kPrepZ:
        frame.x[q] = faulty ? 1 : 0;
        frame.z[q] = 0;
        break;
      case GateKind::kPrepX:
        frame.x[q] = 0;
        frame.z[q] = faulty ? 1 : 0;
        break;
      case GateKind::kCnot: {
        const std::uint32_t t = g.qubits[1];
        frame.x[t] ^= frame.x[q];
        frame.z[q] ^= frame.z[t];
        if (faulty) {
          apply_pauli(frame, q, cnot_control_pauli(f));
          apply_pauli(frame, t, cnot_target_pauli(f));
        }
        break;
      }
      case GateKind::kMeasZ:
        frame.record_flips.push_back(frame.x[q] ^ static_cast<std::uint8_t>(faulty));
        break;
      case GateKind::kMeasX:
        frame.record_flips.push_back(frame.z[q] ^ static_cast<std::uint8_t>(faulty));
        break;
    }
  }
  return frame;
}

Syndrome syndrome_from_frame(const Circuit& circuit, const PauliFrame& frame) {
  Syndrome s;
  s.detectors.reserve(circuit.num_detectors());
  for (const DetectorDef& det : circuit.detectors()) {
    std::uint8_t bit = frame.record_flips[det.record];
    if (det.previous_record >= 0) bit ^= frame.record_flips[static_cast<std::size_t>(det.previous_record)];
    s.detectors.push_back(bit);
  }
  s.final_checks.reserve(circuit.num_checks());
  for (const Check& check : circuit.checks()) {
    // X checks see Z components and vice versa.
    const auto& comp = check.type == CheckType::kX ? frame.z : frame.x;
    std::uint8_t bit = 0;
    for (std::uint32_t q : check.support) bit ^= comp[q];
    s.final_checks.push_back(bit);
  }
  const std::size_t last = static_cast<std::size_t>(circuit.rounds() - 1) * circuit.num_checks();
  s.final_layer.reserve(circuit.num_checks());
  for (std::size_t c = 0; c < circuit.num_checks(); ++c) {
    s.final_layer.push_back(s.final_checks[c] ^ frame.record_flips[last + c]);
  }
  bool z_flip = false;
  for (std::uint32_t q : circuit.logical_x()) z_flip ^= frame.z[q] != 0;
  bool x_flip = false;
  for (std::uint32_t q : circuit.logical_z()) x_flip ^= frame.x[q] != 0;
  s.logical_flip[static_cast<int>(Observable::kX)] = x_flip;
  s.logical_flip[static_cast<int>(Observable::kZ)] = z_flip;
  return s;
}

Syndrome propagate(const Circuit& circuit, const Event& event) {
  return syndrome_from_frame(circuit, simulate_frame(circuit, event));
}

std::string format_syndrome(const Circuit& circuit, const Syndrome& syndrome) {
  std::ostringstream out;
  const std::size_t n = circuit.num_checks();
  for (std::uint32_t r = 0; r < circuit.rounds(); ++r) {
    for (std::size_t c = 0; c < n; ++c) out << static_cast<char>('0' + syndrome.detectors[r * n + c]);
    out << '\n';
  }
  for (std::uint8_t b : syndrome.final_layer) out << static_cast<char>('0' + b);
  out << ' ' << syndrome.flip(Observable::kX) << ' ' << syndrome.flip(Observable::kZ) << '\n';
  return out.str();
}

std::vector<std::uint32_t> fired_detectors(const Syndrome& syndrome) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < syndrome.detectors.size(); ++i) {
    if (syndrome.detectors[i]) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

}  // namespace qecsplit
