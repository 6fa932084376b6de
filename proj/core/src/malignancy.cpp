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


#include "qecsplit/malignancy.hpp"

#include <algorithm>

#include "qecsplit/errors.hpp"

namespace qecsplit {

namespace {

// Keeps ids that occur an odd number of times.
void cancel_pairs(std::vector<std::uint32_t>& ids) {
  std::sort(ids.begin(), ids.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    if ((j - i) % 2 == 1) ids[out++] = ids[i];
    i = j;
  }
  ids.resize(out);
}

std::uint32_t commit_rounds_for(const Circuit& circuit, const OracleOptions& options) {
  const std::uint32_t c = options.decode_rounds == 0 ? circuit.distance() : options.decode_rounds;
  return std::min(c, circuit.rounds());
}

}  // namespace

MalignancyOracle::MalignancyOracle(const Circuit& circuit, const FaultEffectTable& effects,
                                   const NoiseModel& weights, Observable obs, OracleOptions options)
    : obs_(obs),
      commit_rounds_(commit_rounds_for(circuit, options)),
      first_window_(circuit, obs, 0, circuit.rounds(), false),
      second_window_(circuit, obs, commit_rounds_, circuit.rounds(), true) {
  first_ = std::make_unique<Decoder>(build_decoding_graph(circuit, weights, effects, first_window_),
                                     options.backend);
  second_ = std::make_unique<Decoder>(build_decoding_graph(circuit, weights, effects, second_window_),
                                      options.backend);

  // Extended ids of the decoded check type, over all rounds plus final layer.
  const DetectorWindow everything(circuit, obs, 0, circuit.rounds(), true);
  const int obs_index = static_cast<int>(obs);
  gate_offset_.reserve(circuit.num_gates() + 1);
  gate_offset_.push_back(0);
  id_offset_.push_back(0);
  for (const Gate& g : circuit.gates()) {
    kinds_.push_back(g.kind);
    for (std::size_t i = 0; i < fault_count(g.kind); ++i) {
      const FaultEffect& e = effects.effect(g.id, fault_label_at(g.kind, i));
      for (std::uint32_t v : everything.vertices(e)) ids_.push_back(everything.extended_id(v));
      id_offset_.push_back(ids_.size());
      flip_.push_back(e.logical_flip[obs_index] ? 1 : 0);
    }
    gate_offset_.push_back(gate_offset_.back() + fault_count(g.kind));
  }
}

std::size_t MalignancyOracle::slot(const FaultPair& p) const {
  if (p.gate >= kinds_.size()) throw InvalidEvent("event names a gate outside the circuit");
  return gate_offset_[p.gate] + fault_index(kinds_[p.gate], p.fault);
}

void MalignancyOracle::toggle(std::size_t s, std::vector<std::uint32_t>& ids) const {
  ids.insert(ids.end(), ids_.begin() + static_cast<std::ptrdiff_t>(id_offset_[s]),
             ids_.begin() + static_cast<std::ptrdiff_t>(id_offset_[s + 1]));
}

MalignancyDetail MalignancyOracle::evaluate(const Event& event) const {
  MalignancyDetail out;
  std::vector<std::uint32_t> fired;
  for (const FaultPair& p : event.pairs()) {
    const std::size_t s = slot(p);
    toggle(s, fired);
    out.true_flip ^= flip_[s] != 0;
  }
  cancel_pairs(fired);

  for (std::uint32_t id : fired) {
    const std::int64_t v = first_window_.vertex(id);
    if (v >= 0) out.defects.push_back(static_cast<std::uint32_t>(v));
  }
  // Apply every matched-path edge whose earlier endpoint lies in the commit
  // region. Each commit-region defect is cleared; crossings into the buffer
  // leave a defect there for the second pass.
  if (!out.defects.empty()) {
    const MatchResult m = first_->decode(out.defects);
    const auto& edges = first_->graph().edges();
    const std::uint32_t boundary = first_->graph().boundary();
    for (const auto& [a, b] : m.pairs) {
      for (std::uint32_t k : first_->path_edges(a, b)) {
        const DecodingEdge& e = edges[k];
        const std::uint32_t lower = e.v == boundary ? first_window_.round(e.u)
                                                    : std::min(first_window_.round(e.u), first_window_.round(e.v));
        if (lower >= commit_rounds_) continue;
        toggle(slot(e.representative), fired);
        out.committed_flip ^= e.flip;
      }
    }
    cancel_pairs(fired);
  }

  for (std::uint32_t id : fired) {
    const std::int64_t v = second_window_.vertex(id);
    if (v < 0) throw DecodingError("committed correction left a defect inside the commit region");
    out.remaining.push_back(static_cast<std::uint32_t>(v));
  }
  if (!out.remaining.empty()) out.final_flip = second_->decode(out.remaining).flip;
  out.malignant = out.true_flip != (out.committed_flip != out.final_flip);
  return out;
}

bool MalignancyOracle::is_malignant(const Event& event) const { return evaluate(event).malignant; }

}  // namespace qecsplit
