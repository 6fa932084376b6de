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


#include "qecsplit/event.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qecsplit/errors.hpp"

namespace qecsplit {

namespace {

bool by_gate(const FaultPair& a, const FaultPair& b) { return a.gate < b.gate; }

}  // namespace

Event Event::from_pairs(std::vector<FaultPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].gate == pairs[i - 1].gate) {
      throw InvalidEvent("gate " + std::to_string(pairs[i].gate) + " appears twice in event");
    }
  }
  Event e;
  e.pairs_ = std::move(pairs);
  return e;
}

std::optional<FaultLabel> Event::fault_at(std::uint32_t gate) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), FaultPair{gate, {}}, by_gate);
  if (it == pairs_.end() || it->gate != gate) return std::nullopt;
  return it->fault;
}

void Event::set(FaultPair p) {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p, by_gate);
  if (it != pairs_.end() && it->gate == p.gate) {
    it->fault = p.fault;
  } else {
    pairs_.insert(it, p);
  }
}

bool Event::erase(std::uint32_t gate) {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), FaultPair{gate, {}}, by_gate);
  if (it == pairs_.end() || it->gate != gate) return false;
  pairs_.erase(it);
  return true;
}

std::vector<std::uint64_t> Event::key() const {
  std::vector<std::uint64_t> out;
  out.reserve(pairs_.size());
  for (const FaultPair& p : pairs_) {
    out.push_back((static_cast<std::uint64_t>(p.gate) << 4) | p.fault.code);
  }
  return out;
}

std::uint64_t Event::hash() const {
  // FNV-1a over the packed pairs, then a splitmix finalizer.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const FaultPair& p : pairs_) {
    h ^= (static_cast<std::uint64_t>(p.gate) << 4) | p.fault.code;
    h *= 0x100000001b3ull;
  }
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

std::string Event::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out << ", ";
    out << '(' << pairs_[i].gate << ',' << static_cast<int>(pairs_[i].fault.code) << ')';
  }
  out << '}';
  return out.str();
}

void validate_event(const Event& event, const Circuit& circuit) {
  for (const FaultPair& p : event.pairs()) {
    if (p.gate >= circuit.num_gates()) {
      throw InvalidEvent("event names gate " + std::to_string(p.gate) + " outside the circuit");
    }
    if (!is_valid_fault(circuit.gate(p.gate).kind, p.fault)) {
      throw InvalidEvent("fault label " + std::to_string(p.fault.code) + " incompatible with " +
                         std::string(gate_kind_name(circuit.gate(p.gate).kind)) + " gate " +
                         std::to_string(p.gate));
    }
  }
}

double log_insertion_ratio(const NoiseModel& noise, std::uint32_t gate, FaultLabel f) {
  const double pr = noise.failure_probability(gate);
  return std::log(pr * noise.conditional(gate, f)) - std::log1p(-pr);
}

double event_log_probability(const Event& event, const NoiseModel& noise) {
  double out = noise.log_no_fault();
  for (const FaultPair& p : event.pairs()) {
    if (p.gate >= noise.num_gates()) throw InvalidEvent("event gate outside noise model");
    out += log_insertion_ratio(noise, p.gate, p.fault);
  }
  return out;
}

}  // namespace qecsplit
