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


#include "qecsplit/chain.hpp"

#include <algorithm>
#include <random>

#include "qecsplit/errors.hpp"

namespace qecsplit {

Proposal draw_proposal(const NoiseModel& noise, Rng& rng) {
  const auto gate = static_cast<std::uint32_t>(
      std::uniform_int_distribution<std::size_t>(0, noise.num_gates() - 1)(rng));
  const GateKind kind = noise.kind(gate);
  const std::size_t i = std::uniform_int_distribution<std::size_t>(0, fault_count(kind) - 1)(rng);
  return {gate, fault_label_at(kind, i)};
}

double proposal_probability(const NoiseModel& noise, const Proposal& p) {
  return 1.0 / static_cast<double>(noise.num_gates()) / static_cast<double>(fault_count(noise.kind(p.gate)));
}

MoveKind move_kind(const Event& event, const Proposal& p) {
  const auto h = event.fault_at(p.gate);
  if (!h) return MoveKind::kInsert;
  return *h == p.fault ? MoveKind::kDelete : MoveKind::kReplace;
}

Event apply_proposal(const Event& event, const Proposal& p) {
  Event next = event;
  if (move_kind(event, p) == MoveKind::kDelete) {
    next.erase(p.gate);
  } else {
    next.set({p.gate, p.fault});
  }
  return next;
}

double acceptance_probability(const Event& event, const Proposal& p, const NoiseModel& noise) {
  const double pr = noise.failure_probability(p.gate);
  const double qf = noise.conditional(p.gate, p.fault);
  switch (move_kind(event, p)) {
    case MoveKind::kInsert:
      return std::min(1.0, pr * qf / (1.0 - pr));
    case MoveKind::kDelete: {
      const double num = 1.0 - pr;
      const double den = pr * qf;
      return den <= 0.0 ? 1.0 : std::min(1.0, num / den);
    }
    case MoveKind::kReplace: {
      const double qh = noise.conditional(p.gate, *event.fault_at(p.gate));
      return qh <= 0.0 ? 1.0 : std::min(1.0, qf / qh);
    }
  }
  return 0.0;
}

StepOutcome metropolis_step(ChainState& chain, const NoiseModel& noise, const EventClassifier& classifier) {
  ++chain.steps;
  const Proposal p = draw_proposal(noise, chain.rng);
  const double alpha = acceptance_probability(chain.event, p, noise);
  if (!(uniform01(chain.rng) < alpha)) return StepOutcome::kRejected;
  ++chain.accepted;
  Event next = apply_proposal(chain.event, p);
  if (!classifier.is_malignant(next)) return StepOutcome::kBenign;
  chain.event = std::move(next);
  ++chain.jumps;
  return StepOutcome::kJump;
}

}  // namespace qecsplit
