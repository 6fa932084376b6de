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


#ifndef QECSPLIT_MALIGNANCY_HPP_
#define QECSPLIT_MALIGNANCY_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "qecsplit/circuit.hpp"
#include "qecsplit/decoder.hpp"
#include "qecsplit/event.hpp"
#include "qecsplit/fault_effects.hpp"
#include "qecsplit/noise.hpp"

namespace qecsplit {

// Decides membership in the failure set. Implementations must be safe for
// concurrent calls.
class EventClassifier {
 public:
  virtual ~EventClassifier() = default;
  virtual bool is_malignant(const Event& event) const = 0;
  // Matching-decoder invocations so far (0 for classifiers without one).
  virtual std::uint64_t decoder_calls() const { return 0; }
};

struct OracleOptions {
  // Rounds whose corrections are committed by the first decode; 0 means d.
  std::uint32_t decode_rounds = 0;
  MatchingBackend backend = MatchingBackend::kAuto;
};

struct MalignancyDetail {
  // First-stage defects (vertices of the measured-round window).
  std::vector<std::uint32_t> defects;
  // Second-stage defects left after committing the first-stage correction.
  std::vector<std::uint32_t> remaining;
  bool true_flip = false;
  bool committed_flip = false;
  bool final_flip = false;
  bool malignant = false;
};

// Two-stage windowed MWPM. The first decode sees every measured round, but
// only corrections touching the first decode_rounds rounds are applied; the
// later rounds act as a buffer. What is left (later rounds plus the final
// readout layer) is decoded in a second pass. The event is malignant when the
// total correction and the event differ by a logical operator.
class MalignancyOracle : public EventClassifier {
 public:
  // `weights` fixes the decoder's edge weights; it need not be the noise the
  // events are sampled from.
  MalignancyOracle(const Circuit& circuit, const FaultEffectTable& effects, const NoiseModel& weights,
                   Observable obs, OracleOptions options = {});

  bool is_malignant(const Event& event) const override;
  std::uint64_t decoder_calls() const override { return first_->decode_count(); }
  MalignancyDetail evaluate(const Event& event) const;

  Observable observable() const { return obs_; }
  std::uint32_t decode_rounds() const { return commit_rounds_; }
  const DetectorWindow& first_window() const { return first_window_; }
  const DetectorWindow& second_window() const { return second_window_; }
  // The first-stage decoder; its decode_count() is the matching count.
  const Decoder& decoder() const { return *first_; }
  const Decoder& second_decoder() const { return *second_; }

 private:
  std::size_t slot(const FaultPair& p) const;
  void toggle(std::size_t s, std::vector<std::uint32_t>& ids) const;

  Observable obs_;
  std::uint32_t commit_rounds_;
  DetectorWindow first_window_;
  DetectorWindow second_window_;
  std::unique_ptr<Decoder> first_;
  std::unique_ptr<Decoder> second_;
  std::vector<GateKind> kinds_;
  std::vector<std::size_t> gate_offset_;
  // Per (gate, fault) slot: extended detector ids of the decoded check type
  // (sorted) and the logical flip.
  std::vector<std::size_t> id_offset_;
  std::vector<std::uint32_t> ids_;
  std::vector<std::uint8_t> flip_;
};

}  // namespace qecsplit

#endif  // QECSPLIT_MALIGNANCY_HPP_
