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


#ifndef QECSPLIT_CHAIN_HPP_
#define QECSPLIT_CHAIN_HPP_

#include <cstdint>

#include "qecsplit/event.hpp"
#include "qecsplit/malignancy.hpp"
#include "qecsplit/noise.hpp"
#include "qecsplit/rng.hpp"

namespace qecsplit {

// A proposed (gate, fault) tuple: gate uniform, then fault uniform among the
// gate's labels.
struct Proposal {
  std::uint32_t gate = 0;
  FaultLabel fault;
};

enum class MoveKind : std::uint8_t {
  kInsert,   // gate not in the event
  kDelete,   // gate present with the same fault
  kReplace,  // gate present with a different fault
};

Proposal draw_proposal(const NoiseModel& noise, Rng& rng);
// Probability of drawing `p`: 1/G * 1/|faults(g)|.
double proposal_probability(const NoiseModel& noise, const Proposal& p);
MoveKind move_kind(const Event& event, const Proposal& p);
Event apply_proposal(const Event& event, const Proposal& p);

// Metropolis acceptance for the move from `event` under `noise`:
//   insert  min(1, pr Pr(f) / (1 - pr))
//   delete  min(1, (1 - pr) / (pr Pr(f)))
//   replace min(1, Pr(f) / Pr(h))
double acceptance_probability(const Event& event, const Proposal& p, const NoiseModel& noise);

struct ChainState {
  Event event;
  Rng rng;
  std::uint64_t steps = 0;
  std::uint64_t accepted = 0;
  // Accepted moves that landed on a new malignant event.
  std::uint64_t jumps = 0;
};

enum class StepOutcome : std::uint8_t { kRejected, kBenign, kJump };

// One proposal. The acceptance coin is tossed first; only accepted moves are
// classified, and the chain moves only when the new event is malignant.
StepOutcome metropolis_step(ChainState& chain, const NoiseModel& noise, const EventClassifier& classifier);

}  // namespace qecsplit

#endif  // QECSPLIT_CHAIN_HPP_
