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


#include "qecsplit/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "qecsplit/errors.hpp"

namespace qecsplit {

Schedule generate_schedule(double p_start, double p_target, int distance, double census) {
  if (!(p_target > 0.0 && p_target < p_start && p_start < 1.0)) {
    throw InvalidParameter("schedule needs 0 < p_target < p_start < 1");
  }
  if (distance < 1 || !(census >= 0.0)) throw InvalidParameter("schedule needs d >= 1 and census >= 0");
  Schedule s;
  double p = p_start;
  s.points.push_back(p);
  for (;;) {
    const double w = std::max(distance / 2.0, p * census);
    s.w.push_back(w);
    const double next = p * std::exp2(-1.0 / std::sqrt(w));
    if (next <= p_target * (1.0 + 1e-12)) {
      s.points.push_back(p_target);
      break;
    }
    s.points.push_back(next);
    p = next;
  }
  return s;
}

ScheduleVariant parse_schedule_variant(std::string_view text) {
  if (text == "default") return ScheduleVariant::kDefault;
  if (text == "every-other") return ScheduleVariant::kEveryOther;
  if (text == "every-4th") return ScheduleVariant::kEveryFourth;
  if (text == "endpoints") return ScheduleVariant::kEndpoints;
  if (text == "twice") return ScheduleVariant::kTwice;
  throw InvalidParameter("unknown schedule variant: " + std::string(text));
}

std::string_view schedule_variant_name(ScheduleVariant v) {
  switch (v) {
    case ScheduleVariant::kDefault:
      return "default";
    case ScheduleVariant::kEveryOther:
      return "every-other";
    case ScheduleVariant::kEveryFourth:
      return "every-4th";
    case ScheduleVariant::kEndpoints:
      return "endpoints";
    case ScheduleVariant::kTwice:
      return "twice";
  }
  return "default";
}

Schedule apply_variant(const Schedule& schedule, ScheduleVariant variant) {
  if (variant == ScheduleVariant::kDefault || schedule.points.size() < 2) return schedule;
  const auto& pts = schedule.points;
  Schedule out;
  if (variant == ScheduleVariant::kTwice) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      out.points.push_back(pts[i]);
      out.points.push_back(std::sqrt(pts[i] * pts[i + 1]));
    }
    out.points.push_back(pts.back());
    return out;
  }
  const std::size_t stride = variant == ScheduleVariant::kEveryOther    ? 2
                             : variant == ScheduleVariant::kEveryFourth ? 4
                                                                        : pts.size();
  for (std::size_t i = 0; i + 1 < pts.size(); i += stride) out.points.push_back(pts[i]);
  out.points.push_back(pts.back());
  return out;
}

Schedule explicit_schedule(std::vector<double> points) {
  if (points.empty()) throw InvalidParameter("schedule needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i] > 0.0 && points[i] < 1.0)) throw InvalidParameter("schedule points must lie in (0, 1)");
    if (i > 0 && !(points[i] < points[i - 1])) throw InvalidParameter("schedule must be strictly decreasing");
  }
  Schedule s;
  s.points = std::move(points);
  return s;
}

}  // namespace qecsplit
