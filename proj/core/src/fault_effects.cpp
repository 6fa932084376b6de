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


#include "qecsplit/fault_effects.hpp"

#include <algorithm>
#include <iterator>

#include "qecsplit/errors.hpp"

namespace qecsplit {

namespace {

FaultEffect effect_from_syndrome(const Syndrome& s) {
  FaultEffect e;
  for (std::size_t i = 0; i < s.detectors.size(); ++i) {
    if (s.detectors[i]) e.detectors.push_back(static_cast<std::uint32_t>(i));
  }
  for (std::size_t i = 0; i < s.final_checks.size(); ++i) {
    if (s.final_checks[i]) e.final_checks.push_back(static_cast<std::uint32_t>(i));
    if (s.final_layer[i]) e.final_layer.push_back(static_cast<std::uint32_t>(i));
  }
  e.logical_flip = s.logical_flip;
  return e;
}

FaultEffect combine(const FaultEffect& a, const FaultEffect& b) {
  FaultEffect e;
  e.detectors = symmetric_difference(a.detectors, b.detectors);
  e.final_checks = symmetric_difference(a.final_checks, b.final_checks);
  e.final_layer = symmetric_difference(a.final_layer, b.final_layer);
  e.logical_flip[0] = a.logical_flip[0] != b.logical_flip[0];
  e.logical_flip[1] = a.logical_flip[1] != b.logical_flip[1];
  return e;
}

}  // namespace

std::vector<std::uint32_t> symmetric_difference(std::span<const std::uint32_t> a,
                                                std::span<const std::uint32_t> b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FaultEffectTable::FaultEffectTable(const Circuit& circuit)
    : num_detectors_(static_cast<std::uint32_t>(circuit.num_detectors())),
      num_checks_(static_cast<std::uint32_t>(circuit.num_checks())) {
  offsets_.reserve(circuit.num_gates() + 1);
  offsets_.push_back(0);
  for (const Gate& g : circuit.gates()) {
    kinds_.push_back(g.kind);
    offsets_.push_back(offsets_.back() + fault_count(g.kind));
  }
  effects_.reserve(offsets_.back());

  auto single = [&circuit](std::uint32_t gate, std::uint8_t code) {
    return effect_from_syndrome(propagate(circuit, Event::from_pairs({{gate, FaultLabel{code}}})));
  };
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::kCnot) {
      effects_.push_back(single(g.id, 1));
      continue;
    }
    // Basis faults: X and Z on the control, X and Z on the target.
    const FaultEffect cx = single(g.id, 4);
    const FaultEffect cz = single(g.id, 12);
    const FaultEffect tx = single(g.id, 1);
    const FaultEffect tz = single(g.id, 3);
    const FaultEffect none;
    const FaultEffect cy = combine(cx, cz);
    const FaultEffect ty = combine(tx, tz);
    const FaultEffect* control[4] = {&none, &cx, &cy, &cz};
    const FaultEffect* target[4] = {&none, &tx, &ty, &tz};
    for (std::uint8_t code = 1; code < 16; ++code) {
      effects_.push_back(combine(*control[code >> 2], *target[code & 3]));
    }
  }
}

const FaultEffect& FaultEffectTable::effect(std::uint32_t gate, FaultLabel f) const {
  if (gate >= kinds_.size()) throw InvalidEvent("gate id outside the circuit");
  return effects_[offsets_[gate] + fault_index(kinds_[gate], f)];
}

Syndrome FaultEffectTable::syndrome(const Event& event) const {
  Syndrome s;
  s.detectors.assign(num_detectors_, 0);
  s.final_checks.assign(num_checks_, 0);
  s.final_layer.assign(num_checks_, 0);
  for (const FaultPair& p : event.pairs()) {
    const FaultEffect& e = effect(p.gate, p.fault);
    for (std::uint32_t d : e.detectors) s.detectors[d] ^= 1;
    for (std::uint32_t c : e.final_checks) s.final_checks[c] ^= 1;
    for (std::uint32_t c : e.final_layer) s.final_layer[c] ^= 1;
    s.logical_flip[0] = s.logical_flip[0] != e.logical_flip[0];
    s.logical_flip[1] = s.logical_flip[1] != e.logical_flip[1];
  }
  return s;
}

}  // namespace qecsplit
