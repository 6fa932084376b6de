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


#ifndef QECSPLIT_EVENT_HPP_
#define QECSPLIT_EVENT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qecsplit/circuit.hpp"
#include "qecsplit/noise.hpp"

namespace qecsplit {

struct FaultPair {
  std::uint32_t gate = 0;
  FaultLabel fault;

  friend bool operator==(const FaultPair&, const FaultPair&) = default;
  friend auto operator<=>(const FaultPair&, const FaultPair&) = default;
};

// A set of (gate, fault) pairs with at most one pair per gate, kept sorted by
// gate id so equal sets compare and hash equal.
class Event {
 public:
  Event() = default;

  // Sorts the pairs; throws InvalidEvent if a gate appears twice.
  static Event from_pairs(std::vector<FaultPair> pairs);

  std::span<const FaultPair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  std::optional<FaultLabel> fault_at(std::uint32_t gate) const;
  // Inserts or replaces the pair for p.gate.
  void set(FaultPair p);
  // Returns false if the gate was not present.
  bool erase(std::uint32_t gate);

  // Canonical string key: gate ids and labels packed as gate << 4 | code.
  std::vector<std::uint64_t> key() const;
  std::uint64_t hash() const;
  std::string to_string() const;

  friend bool operator==(const Event&, const Event&) = default;

 private:
  std::vector<FaultPair> pairs_;
};

// Throws InvalidEvent if a pair names a missing gate or a label the gate kind
// does not have.
void validate_event(const Event& event, const Circuit& circuit);

// log π(E) = Σ_{(g,f)∈E} log(pr_g Pr_g(f)) + Σ_{g∉E} log(1 - pr_g).
double event_log_probability(const Event& event, const NoiseModel& noise);

// log(pr_g Pr_g(f) / (1 - pr_g)): change in log π when (g, f) is added.
double log_insertion_ratio(const NoiseModel& noise, std::uint32_t gate, FaultLabel f);

}  // namespace qecsplit

#endif  // QECSPLIT_EVENT_HPP_
