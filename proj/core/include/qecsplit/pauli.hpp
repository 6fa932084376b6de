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


#ifndef QECSPLIT_PAULI_HPP_
#define QECSPLIT_PAULI_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qecsplit/circuit.hpp"
#include "qecsplit/event.hpp"

namespace qecsplit {

// Pauli frame of the accumulated fault, one bit per qubit per component, plus
// one flip bit per measurement record.
struct PauliFrame {
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> z;
  std::vector<std::uint8_t> record_flips;
};

struct Syndrome {
  std::vector<std::uint8_t> detectors;
  // Ideal syndrome of the data frame left after the last round, per check.
  std::vector<std::uint8_t> final_checks;
  // Final detector layer: final_checks XOR the check's last measured record.
  std::vector<std::uint8_t> final_layer;
  // Raw parity of the final data frame against each logical operator. Index
  // with static_cast<int>(Observable).
  std::array<bool, 2> logical_flip{false, false};

  bool flip(Observable obs) const { return logical_flip[static_cast<int>(obs)]; }
};

// Runs every gate of the circuit, inserting each fault right after its gate.
// Throws InvalidEvent for labels the gate kind does not have.
PauliFrame simulate_frame(const Circuit& circuit, const Event& event);

Syndrome syndrome_from_frame(const Circuit& circuit, const PauliFrame& frame);
Syndrome propagate(const Circuit& circuit, const Event& event);

// Debug dump: one line of 0/1 characters per round of detectors, then one line
// for the final detector layer and the two logical flip bits (X, Z).
std::string format_syndrome(const Circuit& circuit, const Syndrome& syndrome);

// Indices of set bits.
std::vector<std::uint32_t> fired_detectors(const Syndrome& syndrome);

}  // namespace qecsplit

#endif  // QECSPLIT_PAULI_HPP_
