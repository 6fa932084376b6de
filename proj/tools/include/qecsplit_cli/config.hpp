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


#ifndef QECSPLIT_CLI_CONFIG_HPP_
#define QECSPLIT_CLI_CONFIG_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qecsplit::cli {

struct RunConfig {
  int d = 3;
  // 0 means 2d.
  int rounds = 0;
  // X, Z or both.
  std::string observable = "Z";
  // mc, subset or split.
  std::string method = "mc";

  // Base physical rate for mc and subset.
  double p = 1e-3;
  double p_start = 1e-3;
  double p_target = 1e-4;
  // Plaquette column whose gates are scaled by column_factor (-2 = none).
  int column = -2;
  double column_factor = 1.0;

  // default, every-other, every-4th, endpoints or twice.
  std::string schedule = "default";
  // Explicit points; overrides p_start/p_target when non-empty.
  std::vector<double> points;
  // gates or edges: the census in w_i = max(d/2, p_i * census).
  std::string census = "gates";

  std::uint64_t chains = 20;
  std::uint64_t min_jumps = 10;
  std::uint64_t min_chains_ok = 18;
  std::uint64_t min_samples = 100;
  double rhat_target = 1.1;
  double burn_in = 10.0;
  double sample_interval = 1.0;
  double max_proposals = 5000.0;
  // frozen or per-point.
  std::string weights = "frozen";
  bool expire_events = false;

  std::uint64_t stop_failures = 1000;
  std::uint64_t max_shots = 1'000'000'000ull;
  std::uint64_t setup_failures = 1000;
  std::uint64_t subset_max_weight = 4;
  std::uint64_t shots_per_weight = 100000;
  std::uint64_t decode_rounds = 0;

  std::uint64_t seed = 1;
  std::string output = "run.csv";
  // Wall-clock seconds in the CSV; off keeps reruns byte-identical.
  bool record_timing = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct ConfigKey {
  std::string name;
  std::string help;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

// Every key, in serialization order.
const std::vector<ConfigKey>& config_keys();

// Sets one key; throws InvalidParameter for unknown keys or bad values.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value);

// `key = value` lines; blank lines and `#` comments are ignored.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});
std::string serialize_config(const RunConfig& config);

// Range and enum checks; throws InvalidParameter.
void validate_config(const RunConfig& config);

int effective_rounds(const RunConfig& config);

}  // namespace qecsplit::cli

#endif  // QECSPLIT_CLI_CONFIG_HPP_
