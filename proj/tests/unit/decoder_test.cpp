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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qecsplit/circuit.hpp"
#include "qecsplit/decoder.hpp"
#include "qecsplit/errors.hpp"
#include "qecsplit/fault_effects.hpp"
#include "qecsplit/matching.hpp"
#include "qecsplit/noise.hpp"

namespace qecsplit {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// All-pairs shortest paths by Floyd-Warshall; the boundary (last index) may
// end a path but never sits in the middle of one.
std::vector<std::vector<std::int64_t>> floyd_warshall(const DecodingGraph& g) {
  const std::size_t n = g.num_vertices() + 1;
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const DecodingEdge& e : g.edges()) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.integer_weight);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.integer_weight);
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

// Minimum over every way to pair defects with each other or the boundary.
std::int64_t brute_force_matching(const std::vector<std::vector<std::int64_t>>& d,
                                  std::vector<std::uint32_t> defects, std::uint32_t boundary) {
  if (defects.empty()) return 0;
  const std::uint32_t first = defects.front();
  std::vector<std::uint32_t> rest(defects.begin() + 1, defects.end());
  std::int64_t best = kInf;
  if (d[first][boundary] < kInf) best = d[first][boundary] + brute_force_matching(d, rest, boundary);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (d[first][rest[i]] >= kInf) continue;
    std::vector<std::uint32_t> left = rest;
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(i));
    best = std::min(best, d[first][rest[i]] + brute_force_matching(d, left, boundary));
  }
  return best;
}

std::vector<std::uint32_t> random_defects(std::uint32_t num_vertices, std::size_t max_size, std::mt19937_64& rng) {
  std::vector<std::uint32_t> all(num_vertices);
  for (std::uint32_t v = 0; v < num_vertices; ++v) all[v] = v;
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  all.resize(size(rng));
  std::sort(all.begin(), all.end());
  return all;
}

TEST(DecoderTest, WeightFormula) {
  EXPECT_NEAR(edge_weight(1e-3), std::log(0.999 / 0.001), 1e-12);
  EXPECT_NEAR(edge_weight(1e-3), 6.9068, 1e-4);
  EXPECT_EQ(discretize_weight(6.90675), 69068);
  EXPECT_EQ(discretize_weight(0.0), 0);
}

TEST(DecoderTest, EdgesMergeIndependentFaults) {
  const Circuit c = build_rotated_surface_code(3, 3);
  const NoiseModel noise = NoiseModel::uniform(c, 1e-3);
  const FaultEffectTable effects(c);
  for (Observable obs : {Observable::kX, Observable::kZ}) {
    const DetectorWindow window(c, obs, 0, c.rounds(), false);
    const DecodingGraph graph = build_decoding_graph(c, noise, effects, window);
    const std::uint32_t boundary = graph.boundary();

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<double>> contributions;
    std::set<std::uint32_t> hyper_vertices;
    for (const Gate& g : c.gates()) {
      for (std::size_t i = 0; i < fault_count(g.kind); ++i) {
        const FaultLabel f = fault_label_at(g.kind, i);
        const auto verts = window.vertices(effects.effect(g.id, f));
        const double q = noise.failure_probability(g.id) * noise.conditional(g.kind, f);
        if (verts.size() == 1) contributions[{verts[0], boundary}].push_back(q);
        if (verts.size() == 2) contributions[{verts[0], verts[1]}].push_back(q);
        if (verts.size() > 2) hyper_vertices.insert(verts.begin(), verts.end());
      }
    }
    std::size_t checked = 0, merged = 0;
    for (const DecodingEdge& e : graph.edges()) {
      const auto it = contributions.find({e.u, e.v});
      ASSERT_NE(it, contributions.end());
      EXPECT_EQ(e.multiplicity, it->second.size());
      double none = 1.0;
      for (double q : it->second) none *= 1.0 - q;
      if (hyper_vertices.count(e.u) || hyper_vertices.count(e.v)) {
        EXPECT_GE(e.probability, 1.0 - none - 1e-15);
        continue;
      }
      EXPECT_NEAR(e.probability, 1.0 - none, 1e-15);
      EXPECT_NEAR(e.weight, std::log((1.0 - e.probability) / e.probability), 1e-12);
      EXPECT_EQ(e.integer_weight, std::llround(e.weight * 1e4));
      ++checked;
      if (it->second.size() >= 2) ++merged;
    }
    EXPECT_EQ(contributions.size(), graph.edges().size());
    EXPECT_GT(checked, 0u);
    EXPECT_GT(merged, 0u);
  }
}

TEST(DecoderTest, MeasurementFlipGivesTimeLikeEdge) {
  const Circuit c = build_rotated_surface_code(3, 6);
  const NoiseModel noise = NoiseModel::uniform(c, 1e-3);
  const DecodingGraph graph = build_decoding_graph(c, noise, Observable::kZ);
  const DetectorWindow window(c, Observable::kZ, 0, c.rounds(), false);
  for (std::uint32_t check : c.checks_of_type(CheckType::kX)) {
    for (std::uint32_t k = 1; k + 2 < c.rounds(); ++k) {
      const auto a = static_cast<std::uint32_t>(window.vertex(c.detector_index(check, k)));
      const auto b = static_cast<std::uint32_t>(window.vertex(c.detector_index(check, k + 1)));
      const auto it = std::find_if(graph.edges().begin(), graph.edges().end(),
                                   [&](const DecodingEdge& e) { return e.u == a && e.v == b; });
      ASSERT_NE(it, graph.edges().end());
      EXPECT_FALSE(it->flip);
    }
  }
}

TEST(DecoderTest, EmptyDefectsAndCallCount) {
  const Circuit c = build_rotated_surface_code(3, 3);
  const Decoder decoder(build_decoding_graph(c, NoiseModel::uniform(c, 1e-3), Observable::kZ));
  EXPECT_EQ(decoder.decode_count(), 0u);
  const MatchResult empty = decoder.decode({});
  EXPECT_TRUE(empty.pairs.empty());
  EXPECT_FALSE(empty.flip);
  EXPECT_EQ(empty.weight, 0.0);
  const std::vector<std::uint32_t> defects{0, 3};
  decoder.decode(defects);
  decoder.decode(defects);
  EXPECT_EQ(decoder.decode_count(), 3u);
}

TEST(DecoderTest, LightEdgeBeatsBoundary) {
  std::vector<DecodingEdge> edges(3);
  edges[0].u = 0, edges[0].v = 1, edges[0].integer_weight = 10;
  edges[1].u = 0, edges[1].v = 2, edges[1].integer_weight = 50;
  edges[2].u = 1, edges[2].v = 2, edges[2].integer_weight = 50, edges[2].flip = true;
  for (MatchingBackend backend : {MatchingBackend::kAuto, MatchingBackend::kBlossom}) {
    const Decoder decoder(DecodingGraph(2, edges), backend);
    const std::vector<std::uint32_t> defects{0, 1};
    const MatchResult r = decoder.decode(defects);
    ASSERT_EQ(r.pairs.size(), 1u);
    EXPECT_EQ(r.pairs[0], (std::pair<std::uint32_t, std::uint32_t>{0, 1}));
    EXPECT_EQ(r.integer_weight, 10);
    EXPECT_FALSE(r.flip);
    const std::vector<std::uint32_t> one{1};
    EXPECT_TRUE(decoder.decode(one).flip);
  }
}

TEST(DecoderTest, RejectsGraphWithoutBoundaryAccess) {
  std::vector<DecodingEdge> edges(2);
  edges[0].u = 0, edges[0].v = 1, edges[0].integer_weight = 10;
  edges[1].u = 1, edges[1].v = 2, edges[1].integer_weight = 10;
  EXPECT_THROW(DecodingGraph(3, edges), DecodingError);
  edges[1].integer_weight = -1;
  EXPECT_THROW(DecodingGraph(3, edges), DecodingError);
}

class BruteForceMatching : public ::testing::TestWithParam<std::tuple<int, MatchingBackend>> {};

TEST_P(BruteForceMatching, MinimumWeightMatchesEnumeration) {
  const auto [d, backend] = GetParam();
  const Circuit c = build_rotated_surface_code(d, d);
  const Decoder decoder(build_decoding_graph(c, NoiseModel::uniform(c, 1e-3), Observable::kZ), backend);
  const auto& graph = decoder.graph();
  const auto dist = floyd_warshall(graph);
  for (std::uint32_t u = 0; u <= graph.num_vertices(); ++u) {
    for (std::uint32_t v = 0; v <= graph.num_vertices(); ++v) {
      ASSERT_EQ(decoder.distance(u, v), dist[u][v]);
    }
  }
  std::mt19937_64 rng(100 + d);
  for (int trial = 0; trial < 100; ++trial) {
    const auto defects = random_defects(graph.num_vertices(), 10, rng);
    const MatchResult r = decoder.decode(defects);
    ASSERT_EQ(r.integer_weight, brute_force_matching(dist, defects, graph.boundary()));

    // The correction must reproduce the defects exactly.
    std::set<std::uint32_t> toggled;
    bool flip = false;
    std::int64_t sum = 0;
    for (const auto& [a, b] : r.pairs) {
      sum += decoder.distance(a, b);
      for (std::uint32_t k : decoder.path_edges(a, b)) {
        const DecodingEdge& e = graph.edges()[k];
        flip ^= e.flip;
        for (std::uint32_t x : {e.u, e.v}) {
          if (x == graph.boundary()) continue;
          if (!toggled.erase(x)) toggled.insert(x);
        }
      }
    }
    EXPECT_EQ(std::vector<std::uint32_t>(toggled.begin(), toggled.end()), defects);
    EXPECT_EQ(flip, r.flip);
    EXPECT_EQ(sum, r.integer_weight);
  }
}

INSTANTIATE_TEST_SUITE_P(DistancesAndBackends, BruteForceMatching,
                         ::testing::Combine(::testing::Values(3, 5),
                                            ::testing::Values(MatchingBackend::kAuto, MatchingBackend::kBlossom)));

TEST(DecoderTest, DeterministicAcrossInstances) {
  const Circuit c = build_rotated_surface_code(5, 5);
  const NoiseModel noise = NoiseModel::uniform(c, 1e-3);
  const Decoder a(build_decoding_graph(c, noise, Observable::kZ), MatchingBackend::kBlossom);
  const Decoder b(build_decoding_graph(c, noise, Observable::kZ), MatchingBackend::kBlossom);
  EXPECT_EQ(a.graph().dump(), b.graph().dump());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto defects = random_defects(a.graph().num_vertices(), 14, rng);
    const MatchResult ra = a.decode(defects);
    const MatchResult rb = b.decode(defects);
    EXPECT_EQ(ra.pairs, rb.pairs);
    EXPECT_EQ(ra.flip, rb.flip);
  }
}

TEST(DecoderTest, AddingDefectPairNeverLowersWeight) {
  const Circuit c = build_rotated_surface_code(3, 3);
  const Decoder decoder(build_decoding_graph(c, NoiseModel::uniform(c, 1e-3), Observable::kZ));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto defects = random_defects(decoder.graph().num_vertices(), 6, rng);
    const std::int64_t base = decoder.decode(defects).integer_weight;
    std::set<std::uint32_t> more(defects.begin(), defects.end());
    for (std::uint32_t v = 0; v < decoder.graph().num_vertices() && more.size() < defects.size() + 1; ++v) {
      more.insert(v);
    }
    // One extra defect costs at most its boundary distance.
    const std::vector<std::uint32_t> bigger(more.begin(), more.end());
    std::uint32_t added = 0;
    for (std::uint32_t v : bigger) {
      if (!std::binary_search(defects.begin(), defects.end(), v)) added = v;
    }
    EXPECT_LE(decoder.decode(bigger).integer_weight, base + decoder.distance(added, decoder.graph().boundary()));
  }
}

// Best (cardinality, weight) over all matchings of a small graph.
std::pair<std::size_t, std::int64_t> brute_force_max_matching(std::uint32_t n, const std::vector<WeightedEdge>& edges,
                                                              bool max_cardinality) {
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, std::numeric_limits<std::int64_t>::min()));
  for (const WeightedEdge& e : edges) w[e.u][e.v] = w[e.v][e.u] = std::max(w[e.u][e.v], e.weight);
  std::pair<std::size_t, std::int64_t> best{0, 0};
  std::vector<bool> used(n, false);
  std::function<void(std::uint32_t, std::size_t, std::int64_t)> go = [&](std::uint32_t v, std::size_t card,
                                                                         std::int64_t total) {
    while (v < n && used[v]) ++v;
    if (v == n) {
      const bool better = max_cardinality ? std::make_pair(card, total) > best : total > best.second;
      if (better) best = {card, total};
      return;
    }
    used[v] = true;
    go(v + 1, card, total);
    for (std::uint32_t u = v + 1; u < n; ++u) {
      if (used[u] || w[v][u] == std::numeric_limits<std::int64_t>::min()) continue;
      used[u] = true;
      go(v + 1, card + 1, total + w[v][u]);
      used[u] = false;
    }
    used[v] = false;
  };
  go(0, 0, 0);
  return best;
}

TEST(MatchingTest, MaxWeightAgainstEnumeration) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 + trial % 9);
    std::vector<WeightedEdge> edges;
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) continue;
        edges.push_back({u, v, static_cast<std::int64_t>(rng() % 41) - 10});
      }
    }
    for (bool max_card : {false, true}) {
      const auto mate = max_weight_matching(n, edges, max_card);
      ASSERT_EQ(mate.size(), n);
      std::size_t card = 0;
      std::int64_t total = 0;
      for (std::uint32_t v = 0; v < n; ++v) {
        if (mate[v] < 0) continue;
        ASSERT_EQ(mate[static_cast<std::size_t>(mate[v])], static_cast<std::int64_t>(v));
        if (static_cast<std::uint32_t>(mate[v]) < v) continue;
        ++card;
        std::int64_t best = std::numeric_limits<std::int64_t>::min();
        for (const WeightedEdge& e : edges) {
          if ((e.u == v && e.v == mate[v]) || (e.v == v && e.u == mate[v])) best = std::max(best, e.weight);
        }
        ASSERT_NE(best, std::numeric_limits<std::int64_t>::min());
        total += best;
      }
      const auto expected = brute_force_max_matching(n, edges, max_card);
      if (max_card) {
        EXPECT_EQ(card, expected.first);
      }
      EXPECT_EQ(total, expected.second) << "n=" << n << " trial=" << trial;
    }
  }
}

TEST(MatchingTest, MinWeightPerfectOnCompleteGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 * (1 + trial % 5));
    std::vector<WeightedEdge> edges;
    std::vector<std::vector<std::int64_t>> d(n + 1, std::vector<std::int64_t>(n + 1, kInf));
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = u + 1; v < n; ++v) {
        const auto w = static_cast<std::int64_t>(rng() % 1000);
        edges.push_back({u, v, w});
        d[u][v] = d[v][u] = w;
      }
    }
    const auto mate = min_weight_perfect_matching(n, edges);
    std::int64_t total = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      ASSERT_GE(mate[v], 0);
      if (static_cast<std::uint32_t>(mate[v]) > v) total += d[v][static_cast<std::size_t>(mate[v])];
    }
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t v = 0; v < n; ++v) all[v] = v;
    // Boundary index n is unreachable, so enumeration only pairs vertices.
    EXPECT_EQ(total, brute_force_matching(d, all, n));
  }
}

TEST(MatchingTest, NoPerfectMatchingThrows) {
  const std::vector<WeightedEdge> edges{{0, 1, 3}, {1, 2, 4}};
  EXPECT_THROW(min_weight_perfect_matching(3, edges), DecodingError);
}

}  // namespace
}  // namespace qecsplit
