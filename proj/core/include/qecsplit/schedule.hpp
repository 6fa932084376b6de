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


#ifndef QECSPLIT_SCHEDULE_HPP_
#define QECSPLIT_SCHEDULE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qecsplit {

struct Schedule {
  // Strictly decreasing; the last entry is the target.
  std::vector<double> points;
  // w_i used to step away from points[i] (empty for overridden schedules).
  std::vector<double> w;

  std::size_t size() const { return points.size(); }
};

// p_{i+1} = p_i * 2^(-1/sqrt(w_i)), w_i = max(d/2, p_i * census), with the last
// point clamped to p_target. `census` is the gate count by default; the
// number of decoding-graph edges is the other common choice.
Schedule generate_schedule(double p_start, double p_target, int distance, double census);

enum class ScheduleVariant : std::uint8_t { kDefault, kEveryOther, kEveryFourth, kEndpoints, kTwice };

ScheduleVariant parse_schedule_variant(std::string_view text);
std::string_view schedule_variant_name(ScheduleVariant v);

// Thins or densifies a generated schedule. Endpoints are always kept;
// kTwice inserts the geometric midpoint between neighbours.
Schedule apply_variant(const Schedule& schedule, ScheduleVariant variant);

// User-supplied points; throws InvalidParameter unless strictly decreasing
// and inside (0, 1).
Schedule explicit_schedule(std::vector<double> points);

}  // namespace qecsplit

#endif  // QECSPLIT_SCHEDULE_HPP_
