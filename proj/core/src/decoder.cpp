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


#include "qecsplit/decoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <tuple>

#include "qecsplit/errors.hpp"
#include "qecsplit/matching.hpp"

namespace qecsplit {

namespace {

constexpr std::size_t kDynamicProgramLimit = 12;
constexpr std::size_t kExhaustiveHardLimit = 22;
constexpr std::uint32_t kNoEdge = 0xffffffffu;

struct EdgeKey {
  std::uint32_t u;
  std::uint32_t v;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

// Accumulates parallel contributions for one edge.
struct EdgeAccumulator {
  double none = 1.0;  // Π (1 - q_i)
  double best_q = -1.0;
  bool flip = false;
  FaultPair representative;
  std::uint32_t multiplicity = 0;

  void add(double q, bool f, FaultPair rep) {
    none *= 1.0 - q;
    ++multiplicity;
    if (q > best_q) {
      best_q = q;
      flip = f;
      representative = rep;
    }
  }
  void add_mass(double q) {
    none *= 1.0 - q;
    ++multiplicity;
  }
};

EdgeKey make_key(std::uint32_t a, std::uint32_t b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", w);
  return buf;
}

}  // namespace

std::int64_t discretize_weight(double weight) { return std::llround(weight * kWeightScale); }

double edge_weight(double q) {
  if (!(q > 0.0)) throw DecodingError("edge probability must be positive");
  q = std::min(q, 0.5);
  return std::log((1.0 - q) / q);
}

std::uint32_t final_layer_id(const Circuit& circuit, std::uint32_t check) {
  return static_cast<std::uint32_t>(circuit.num_detectors()) + check;
}

DetectorWindow::DetectorWindow(const Circuit& circuit, Observable obs, std::uint32_t first_round,
                               std::uint32_t end_round, bool final_layer)
    : obs_(obs),
      first_round_(first_round),
      end_round_(end_round),
      final_layer_(final_layer),
      num_detectors_(static_cast<std::uint32_t>(circuit.num_detectors())) {
  if (first_round > end_round || end_round > circuit.rounds()) {
    throw InvalidParameter("detector window rounds out of range");
  }
  if (final_layer && end_round != circuit.rounds()) {
    throw InvalidParameter("the final layer can only follow the last measured round");
  }
  const auto& typed = circuit.checks_of_type(detecting_check_type(obs));
  checks_per_round_ = static_cast<std::uint32_t>(typed.size());
  vertex_of_.assign(circuit.num_detectors() + circuit.num_checks(), -1);
  auto add = [this](std::uint32_t id) {
    vertex_of_[id] = static_cast<std::int64_t>(id_of_.size());
    id_of_.push_back(id);
  };
  for (std::uint32_t r = 0; r < first_round; ++r) {
    for (std::uint32_t c : typed) vertex_of_[circuit.detector_index(c, r)] = kBefore;
  }
  for (std::uint32_t r = first_round; r < end_round; ++r) {
    for (std::uint32_t c : typed) add(circuit.detector_index(c, r));
  }
  if (final_layer) {
    for (std::uint32_t c : typed) add(final_layer_id(circuit, c));
  }
}

bool DetectorWindow::reaches_before(const FaultEffect& effect) const {
  for (std::uint32_t det : effect.detectors) {
    if (vertex_of_[det] == kBefore) return true;
  }
  return false;
}

std::vector<std::uint32_t> DetectorWindow::vertices(const FaultEffect& effect) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t det : effect.detectors) {
    if (vertex_of_[det] >= 0) out.push_back(static_cast<std::uint32_t>(vertex_of_[det]));
  }
  if (final_layer_) {
    for (std::uint32_t c : effect.final_layer) {
      const std::int64_t v = vertex_of_[num_detectors_ + c];
      if (v >= 0) out.push_back(static_cast<std::uint32_t>(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DecodingGraph::DecodingGraph(std::uint32_t num_vertices, std::vector<DecodingEdge> edges, GraphStats stats)
    : num_vertices_(num_vertices), edges_(std::move(edges)), stats_(stats) {
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v > num_vertices_ || e.u == e.v) throw DecodingError("decoding edge endpoints invalid");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight) || e.integer_weight < 0) {
      throw DecodingError("decoding edge weight must be finite and non-negative");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const DecodingEdge& a, const DecodingEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw DecodingError("duplicate decoding edge (" + std::to_string(edges_[i].u) + ", " +
                          std::to_string(edges_[i].v) + ")");
    }
  }

  // Every component that carries an edge must reach the boundary.
  std::vector<std::uint32_t> root(num_vertices_ + 1);
  for (std::uint32_t i = 0; i <= num_vertices_; ++i) root[i] = i;
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  std::vector<bool> touched(num_vertices_ + 1, false);
  for (const auto& e : edges_) {
    root[find(e.u)] = find(e.v);
    touched[e.u] = touched[e.v] = true;
  }
  const std::uint32_t b = find(num_vertices_);
  for (std::uint32_t v = 0; v < num_vertices_; ++v) {
    if (touched[v] && find(v) != b) {
      throw DecodingError("vertex " + std::to_string(v) + " lies in a component without boundary access");
    }
  }
}

std::string DecodingGraph::dump() const {
  std::ostringstream out;
  for (const auto& e : edges_) {
    if (e.v == boundary()) continue;
    out << e.u << ' ' << e.v << ' ' << format_weight(e.weight) << ' ' << (e.flip ? 1 : 0) << '\n';
  }
  for (const auto& e : edges_) {
    if (e.v != boundary()) continue;
    out << "BOUNDARY " << e.u << ' ' << format_weight(e.weight) << ' ' << (e.flip ? 1 : 0) << '\n';
  }
  return out.str();
}

DecodingGraph build_decoding_graph(const Circuit& circuit, const NoiseModel& noise,
                                   const FaultEffectTable& effects, const DetectorWindow& window) {
  if (noise.num_gates() != circuit.num_gates()) throw InvalidParameter("noise model does not match circuit");
  const std::uint32_t boundary = window.num_vertices();
  const int obs_index = static_cast<int>(window.observable());

  std::map<EdgeKey, EdgeAccumulator> acc;
  struct Hyper {
    std::vector<std::uint32_t> vertices;
    double q;
  };
  std::vector<Hyper> hyper;
  GraphStats stats;

  for (const Gate& g : circuit.gates()) {
    const double pr = noise.failure_probability(g.id);
    if (pr <= 0.0) continue;
    for (std::size_t i = 0; i < fault_count(g.kind); ++i) {
      const FaultLabel f = fault_label_at(g.kind, i);
      const double q = pr * noise.conditional(g.kind, f);
      if (q <= 0.0) continue;
      ++stats.faults;
      const FaultEffect& e = effects.effect(g.id, f);
      if (window.reaches_before(e)) {
        ++stats.earlier;
        continue;
      }
      auto verts = window.vertices(e);
      if (verts.empty()) {
        ++stats.undetected;
      } else if (verts.size() == 1) {
        acc[EdgeKey{verts[0], boundary}].add(q, e.logical_flip[obs_index], FaultPair{g.id, f});
      } else if (verts.size() == 2) {
        acc[EdgeKey{verts[0], verts[1]}].add(q, e.logical_flip[obs_index], FaultPair{g.id, f});
      } else {
        hyper.push_back({std::move(verts), q});
      }
    }
  }

  // Hyperedges: split into exactly two existing edges when possible.
  for (const Hyper& h : hyper) {
    const auto& s = h.vertices;
    std::vector<std::pair<EdgeKey, EdgeKey>> options;
    if (s.size() == 3) {
      for (std::size_t k = 0; k < 3; ++k) {
        const std::uint32_t a = s[(k + 1) % 3];
        const std::uint32_t b = s[(k + 2) % 3];
        options.push_back({EdgeKey{s[k], boundary}, make_key(a, b)});
      }
    } else if (s.size() == 4) {
      options.push_back({make_key(s[0], s[1]), make_key(s[2], s[3])});
      options.push_back({make_key(s[0], s[2]), make_key(s[1], s[3])});
      options.push_back({make_key(s[0], s[3]), make_key(s[1], s[2])});
    }
    bool placed = false;
    for (const auto& [first, second] : options) {
      if (acc.count(first) && acc.count(second)) {
        acc[first].add_mass(h.q);
        acc[second].add_mass(h.q);
        placed = true;
        break;
      }
    }
    if (placed) {
      ++stats.decomposed;
    } else {
      ++stats.dropped;
      stats.dropped_probability += h.q;
    }
  }

  std::vector<DecodingEdge> edges;
  edges.reserve(acc.size());
  for (const auto& [key, a] : acc) {
    DecodingEdge e;
    e.u = key.u;
    e.v = key.v;
    e.probability = 1.0 - a.none;
    e.weight = edge_weight(e.probability);
    e.integer_weight = discretize_weight(e.weight);
    e.flip = a.flip;
    e.multiplicity = a.multiplicity;
    e.representative = a.representative;
    edges.push_back(std::move(e));
  }
  return DecodingGraph(window.num_vertices(), std::move(edges), stats);
}

DecodingGraph build_decoding_graph(const Circuit& circuit, const NoiseModel& noise, Observable obs) {
  const FaultEffectTable effects(circuit);
  const DetectorWindow window(circuit, obs, 0, circuit.rounds(), false);
  return build_decoding_graph(circuit, noise, effects, window);
}

Decoder::Decoder(DecodingGraph graph, MatchingBackend backend)
    : graph_(std::move(graph)),
      backend_(backend),
      stride_(graph_.num_vertices() + 1) {
  const std::size_t cells = stride_ * stride_;
  dist_.assign(cells, kUnreachable);
  real_dist_.assign(cells, 0.0);
  flip_.assign(cells, 0);
  parent_edge_.assign(cells, kNoEdge);
  std::vector<std::vector<std::uint32_t>> adjacency(stride_);
  const auto& edges = graph_.edges();
  for (std::uint32_t k = 0; k < edges.size(); ++k) {
    adjacency[edges[k].u].push_back(k);
    adjacency[edges[k].v].push_back(k);
  }
  for (std::uint32_t s = 0; s < stride_; ++s) shortest_paths_from(s, adjacency);
}

void Decoder::shortest_paths_from(std::uint32_t source,
                                  const std::vector<std::vector<std::uint32_t>>& adjacency) {
  const std::uint32_t n = static_cast<std::uint32_t>(stride_);
  const std::uint32_t boundary = graph_.boundary();
  const auto& edges = graph_.edges();
  std::vector<std::int64_t> dist(n, kUnreachable);
  std::vector<double> real(n, 0.0);
  std::vector<std::uint8_t> flip(n, 0);
  std::vector<std::uint32_t> parent(n, kNoEdge);
  std::vector<bool> done(n, false);
  using Item = std::pair<std::int64_t, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[source] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == boundary && u != source) continue;
    for (std::uint32_t k : adjacency[u]) {
      const DecodingEdge& e = edges[k];
      const std::uint32_t v = e.u == u ? e.v : e.u;
      if (done[v]) continue;
      const std::int64_t nd = d + e.integer_weight;
      if (nd < dist[v]) {
        dist[v] = nd;
        real[v] = real[u] + e.weight;
        flip[v] = flip[u] ^ static_cast<std::uint8_t>(e.flip);
        parent[v] = k;
        heap.push({nd, v});
      }
    }
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::size_t cell = index(source, v);
    dist_[cell] = dist[v];
    real_dist_[cell] = real[v];
    flip_[cell] = flip[v];
    parent_edge_[cell] = parent[v];
  }
}

std::vector<std::uint32_t> Decoder::path_edges(std::uint32_t u, std::uint32_t v) const {
  std::vector<std::uint32_t> out;
  if (dist_[index(u, v)] == kUnreachable) throw DecodingError("no path between vertices");
  const auto& edges = graph_.edges();
  std::uint32_t x = v;
  while (x != u) {
    const std::uint32_t k = parent_edge_[index(u, x)];
    out.push_back(k);
    x = edges[k].u == x ? edges[k].v : edges[k].u;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Decoder::match_exhaustive(
    std::span<const std::uint32_t> defects) const {
  const std::size_t n = defects.size();
  if (n > kExhaustiveHardLimit) throw DecodingError("too many defects for the exhaustive matcher");
  const std::uint32_t boundary = graph_.boundary();
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::int64_t> best(states, kUnreachable);
  // Partner of the lowest defect in each state; n means the boundary.
  std::vector<std::uint8_t> choice(states, 0);
  best[0] = 0;
  for (std::size_t mask = 1; mask < states; ++mask) {
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & ~(std::size_t{1} << i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(rest >> j & 1)) continue;
      const std::int64_t d = distance(defects[i], defects[j]);
      const std::int64_t sub = best[rest & ~(std::size_t{1} << j)];
      if (d == kUnreachable || sub == kUnreachable) continue;
      if (d + sub < best[mask]) {
        best[mask] = d + sub;
        choice[mask] = static_cast<std::uint8_t>(j);
      }
    }
    const std::int64_t db = distance(defects[i], boundary);
    if (db != kUnreachable && best[rest] != kUnreachable && db + best[rest] < best[mask]) {
      best[mask] = db + best[rest];
      choice[mask] = static_cast<std::uint8_t>(n);
    }
  }
  if (best[states - 1] == kUnreachable) throw DecodingError("defects admit no matching");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::size_t mask = states - 1;
  while (mask) {
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t j = choice[mask];
    mask &= ~(std::size_t{1} << i);
    if (j == n) {
      pairs.push_back({defects[i], boundary});
    } else {
      mask &= ~(std::size_t{1} << j);
      pairs.push_back({defects[i], defects[j]});
    }
  }
  return pairs;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Decoder::match_blossom(
    std::span<const std::uint32_t> defects) const {
  const auto n = static_cast<std::uint32_t>(defects.size());
  const std::uint32_t boundary = graph_.boundary();
  // Vertices 0..n-1 are defects, n..2n-1 their boundary copies.
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * n * 2);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const std::int64_t d = distance(defects[i], defects[j]);
      if (d != kUnreachable) edges.push_back({i, j, d});
    }
    const std::int64_t db = distance(defects[i], boundary);
    if (db != kUnreachable) edges.push_back({i, n + i, db});
    for (std::uint32_t j = i + 1; j < n; ++j) edges.push_back({n + i, n + j, 0});
  }
  const auto mate = min_weight_perfect_matching(2 * n, edges);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto m = static_cast<std::uint32_t>(mate[i]);
    if (m >= n) {
      pairs.push_back({defects[i], boundary});
    } else if (m > i) {
      pairs.push_back({defects[i], defects[m]});
    }
  }
  return pairs;
}

MatchResult Decoder::decode(std::span<const std::uint32_t> defects) const {
  calls_.fetch_add(1, std::memory_order_relaxed);
  std::vector<std::uint32_t> sorted(defects.begin(), defects.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= graph_.num_vertices()) throw DecodingError("defect outside the decoding graph");
    if (i && sorted[i] == sorted[i - 1]) throw DecodingError("duplicate defect");
  }
  MatchResult result;
  if (sorted.empty()) return result;
  const bool exhaustive = backend_ == MatchingBackend::kExhaustive ||
                          (backend_ == MatchingBackend::kAuto && sorted.size() <= kDynamicProgramLimit);
  result.pairs = exhaustive ? match_exhaustive(sorted) : match_blossom(sorted);
  for (const auto& [a, b] : result.pairs) {
    const std::size_t cell = index(a, b);
    result.flip ^= flip_[cell] != 0;
    result.integer_weight += dist_[cell];
    result.weight += real_dist_[cell];
  }
  return result;
}

MatchResult mwpm_decode(const Decoder& decoder, std::span<const std::uint32_t> defects) {
  return decoder.decode(defects);
}

}  // namespace qecsplit
