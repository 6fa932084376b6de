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


#ifndef QECSPLIT_FAULT_EFFECTS_HPP_
#define QECSPLIT_FAULT_EFFECTS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qecsplit/circuit.hpp"
#include "qecsplit/event.hpp"
#include "qecsplit/pauli.hpp"

namespace qecsplit {

// Everything a single (gate, fault) pair does to the rest of the circuit, as
// sorted index lists so composition is a symmetric difference.
struct FaultEffect {
  std::vector<std::uint32_t> detectors;
  std::vector<std::uint32_t> final_checks;
  std::vector<std::uint32_t> final_layer;
  std::array<bool, 2> logical_flip{false, false};
};

// Precomputed effect of every single fault. Since frames compose linearly, the
// syndrome of an event is the XOR of its pairs' effects.
class FaultEffectTable {
 public:
  explicit FaultEffectTable(const Circuit& circuit);

  const FaultEffect& effect(std::uint32_t gate, FaultLabel f) const;
  std::size_t num_gates() const { return offsets_.size() - 1; }

  // Same result as propagate(), by composing table entries.
  Syndrome syndrome(const Event& event) const;

 private:
  std::uint32_t num_detectors_ = 0;
  std::uint32_t num_checks_ = 0;
  std::vector<GateKind> kinds_;
  std::vector<std::size_t> offsets_;
  std::vector<FaultEffect> effects_;
};

// Symmetric difference of two sorted, duplicate-free index lists.
std::vector<std::uint32_t> symmetric_difference(std::span<const std::uint32_t> a,
                                                std::span<const std::uint32_t> b);

}  // namespace qecsplit

#endif  // QECSPLIT_FAULT_EFFECTS_HPP_
