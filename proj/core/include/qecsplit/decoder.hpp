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


#ifndef QECSPLIT_DECODER_HPP_
#define QECSPLIT_DECODER_HPP_

#include <atomic>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qecsplit/circuit.hpp"
#include "qecsplit/event.hpp"
#include "qecsplit/fault_effects.hpp"
#include "qecsplit/noise.hpp"

namespace qecsplit {

// Matching runs on integer weights so that optimality is exact; real weights
// are scaled by this factor and rounded.
inline constexpr double kWeightScale = 1e4;
std::int64_t discretize_weight(double weight);

// log((1 - q) / q), with q clamped to (0, 1/2] so weights stay non-negative.
double edge_weight(double q);

// Detector ids extended with a final layer: ids below circuit.num_detectors()
// are circuit detectors, and num_detectors() + c is check c's final-layer
// detector (ideal final syndrome against the last measured round).
std::uint32_t final_layer_id(const Circuit& circuit, std::uint32_t check);

// Maps the detectors of the check type that sees `obs` errors, in rounds
// [first_round, end_round) and optionally the final layer, to dense vertex
// ids: vertex = (round - first_round) * checks_per_round + local check index,
// with the final layer counted as round circuit.rounds(). Rounds after the
// window are open (they act as boundary); rounds before it are closed: a
// fault that reaches an earlier detector is left out of the window's graph,
// since a decoder of the earlier rounds has already accounted for it.
class DetectorWindow {
 public:
  DetectorWindow(const Circuit& circuit, Observable obs, std::uint32_t first_round,
                 std::uint32_t end_round, bool final_layer);

  Observable observable() const { return obs_; }
  std::uint32_t first_round() const { return first_round_; }
  std::uint32_t end_round() const { return end_round_; }
  bool has_final_layer() const { return final_layer_; }
  std::uint32_t num_vertices() const { return static_cast<std::uint32_t>(id_of_.size()); }
  std::uint32_t checks_per_round() const { return checks_per_round_; }

  // Vertex of an extended detector id, or a negative value outside the window.
  std::int64_t vertex(std::uint32_t id) const { return vertex_of_[id]; }
  std::uint32_t extended_id(std::uint32_t vertex) const { return id_of_[vertex]; }
  // Round of a vertex; the final layer reports circuit.rounds().
  std::uint32_t round(std::uint32_t vertex) const {
    return first_round_ + vertex / checks_per_round_;
  }

  // Sorted window vertices touched by a fault.
  std::vector<std::uint32_t> vertices(const FaultEffect& effect) const;
  // True when the fault fires a detector of this type before first_round.
  bool reaches_before(const FaultEffect& effect) const;

 private:
  static constexpr std::int64_t kBefore = -2;

  Observable obs_;
  std::uint32_t first_round_;
  std::uint32_t end_round_;
  bool final_layer_;
  std::uint32_t num_detectors_;
  std::uint32_t checks_per_round_;
  std::vector<std::int64_t> vertex_of_;
  std::vector<std::uint32_t> id_of_;
};

struct DecodingEdge {
  std::uint32_t u = 0;
  // Equal to the graph's boundary vertex for boundary edges; otherwise u < v.
  std::uint32_t v = 0;
  double probability = 0.0;
  double weight = 0.0;
  std::int64_t integer_weight = 0;
  bool flip = false;
  std::uint32_t multiplicity = 1;
  // Most likely single fault producing this edge; flip is its logical effect.
  FaultPair representative;
};

struct GraphStats {
  std::uint64_t faults = 0;
  std::uint64_t undetected = 0;
  // Faults left out because they reach rounds before the window.
  std::uint64_t earlier = 0;
  std::uint64_t decomposed = 0;
  std::uint64_t dropped = 0;
  double dropped_probability = 0.0;
};

class DecodingGraph {
 public:
  // Edges are sorted into canonical (u, v) order. Throws DecodingError for
  // duplicate edges, out-of-range endpoints, negative weights or a connected
  // component that cannot reach the boundary.
  DecodingGraph(std::uint32_t num_vertices, std::vector<DecodingEdge> edges, GraphStats stats = {});

  std::uint32_t num_vertices() const { return num_vertices_; }
  std::uint32_t boundary() const { return num_vertices_; }
  const std::vector<DecodingEdge>& edges() const { return edges_; }
  const GraphStats& stats() const { return stats_; }

  // `u v weight flip` lines, then `BOUNDARY v weight flip` lines.
  std::string dump() const;

 private:
  std::uint32_t num_vertices_;
  std::vector<DecodingEdge> edges_;
  GraphStats stats_;
};

// Graph over a detector window. Every single (gate, fault) pair with nonzero
// probability is propagated; faults touching one window vertex become boundary
// edges, two vertices an edge, and larger sets are split into two existing
// edges when possible or dropped (counted in stats()).
DecodingGraph build_decoding_graph(const Circuit& circuit, const NoiseModel& noise,
                                   const FaultEffectTable& effects, const DetectorWindow& window);
// Graph over every measured round of the detectors that see `obs` errors.
DecodingGraph build_decoding_graph(const Circuit& circuit, const NoiseModel& noise, Observable obs);

struct MatchResult {
  // Defect pairs; second == graph.boundary() for boundary matches.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  bool flip = false;
  double weight = 0.0;
  std::int64_t integer_weight = 0;
};

enum class MatchingBackend : std::uint8_t {
  kAuto,        // bitmask dynamic program for small defect sets, blossom otherwise
  kBlossom,     // always blossom
  kExhaustive,  // always the dynamic program (exponential; tests only)
};

// Shortest paths are precomputed at construction; decode() is reentrant.
class Decoder {
 public:
  static constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

  explicit Decoder(DecodingGraph graph, MatchingBackend backend = MatchingBackend::kAuto);
  Decoder(const Decoder&) = delete;
  Decoder& operator=(const Decoder&) = delete;

  // Minimum-weight matching of the defects (distinct vertex ids) to each other
  // or the boundary. Throws DecodingError when no matching exists.
  MatchResult decode(std::span<const std::uint32_t> defects) const;

  std::uint64_t decode_count() const { return calls_.load(std::memory_order_relaxed); }
  const DecodingGraph& graph() const { return graph_; }
  MatchingBackend backend() const { return backend_; }

  // Shortest-path quantities; the boundary is a valid endpoint but is never
  // traversed as an intermediate vertex.
  std::int64_t distance(std::uint32_t u, std::uint32_t v) const { return dist_[index(u, v)]; }
  double real_distance(std::uint32_t u, std::uint32_t v) const { return real_dist_[index(u, v)]; }
  bool path_flip(std::uint32_t u, std::uint32_t v) const { return flip_[index(u, v)] != 0; }
  // Edge indices along the shortest path from u to v.
  std::vector<std::uint32_t> path_edges(std::uint32_t u, std::uint32_t v) const;

 private:
  std::size_t index(std::uint32_t u, std::uint32_t v) const {
    return static_cast<std::size_t>(u) * stride_ + v;
  }
  void shortest_paths_from(std::uint32_t source,
                           const std::vector<std::vector<std::uint32_t>>& adjacency);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> match_exhaustive(
      std::span<const std::uint32_t> defects) const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> match_blossom(
      std::span<const std::uint32_t> defects) const;

  DecodingGraph graph_;
  MatchingBackend backend_;
  std::size_t stride_;
  std::vector<std::int64_t> dist_;
  std::vector<double> real_dist_;
  std::vector<std::uint8_t> flip_;
  // Edge entering v on the shortest-path tree rooted at u.
  std::vector<std::uint32_t> parent_edge_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

MatchResult mwpm_decode(const Decoder& decoder, std::span<const std::uint32_t> defects);

}  // namespace qecsplit

#endif  // QECSPLIT_DECODER_HPP_
