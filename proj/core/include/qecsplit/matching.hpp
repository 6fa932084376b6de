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


#ifndef QECSPLIT_MATCHING_HPP_
#define QECSPLIT_MATCHING_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace qecsplit {

struct WeightedEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::int64_t weight = 0;
};

// Maximum-weight matching on a general graph with integer weights (Edmonds'
// blossom algorithm with the O(n^3) primal-dual bookkeeping of Galil). Returns
// mate[v], or -1 for unmatched vertices. With max_cardinality the matching has
// maximum cardinality first and maximum weight among those.
std::vector<std::int64_t> max_weight_matching(std::uint32_t num_vertices,
                                              std::span<const WeightedEdge> edges,
                                              bool max_cardinality);

// Minimum-weight perfect matching. Throws DecodingError if the graph has no
// perfect matching.
std::vector<std::int64_t> min_weight_perfect_matching(std::uint32_t num_vertices,
                                                      std::span<const WeightedEdge> edges);

}  // namespace qecsplit

#endif  // QECSPLIT_MATCHING_HPP_
