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


#include "qecsplit_cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <type_traits>

#include "qecsplit/errors.hpp"

namespace qecsplit::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidParameter("bad value for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

template <typename T>
ConfigKey field(std::string name, T RunConfig::*member, std::string help) {
  ConfigKey k;
  k.name = name;
  k.help = std::move(help);
  k.set = [member, name](RunConfig& c, std::string_view v) {
    if constexpr (std::is_same_v<T, std::string>) {
      c.*member = std::string(v);
    } else if constexpr (std::is_same_v<T, bool>) {
      if (v == "true" || v == "1") {
        c.*member = true;
      } else if (v == "false" || v == "0") {
        c.*member = false;
      } else {
        throw InvalidParameter("bad value for " + name + ": '" + std::string(v) + "'");
      }
    } else if constexpr (std::is_same_v<T, std::vector<double>>) {
      std::vector<double> out;
      std::string_view rest = v;
      while (!trim(rest).empty()) {
        const auto comma = rest.find(',');
        out.push_back(parse_number<double>(name, trim(rest.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      c.*member = std::move(out);
    } else {
      c.*member = parse_number<T>(name, v);
    }
  };
  k.get = [member](const RunConfig& c) -> std::string {
    if constexpr (std::is_same_v<T, std::string>) {
      return c.*member;
    } else if constexpr (std::is_same_v<T, bool>) {
      return c.*member ? "true" : "false";
    } else if constexpr (std::is_same_v<T, std::vector<double>>) {
      std::string out;
      for (double x : c.*member) {
        if (!out.empty()) out += ',';
        out += format_double(x);
      }
      return out;
    } else if constexpr (std::is_floating_point_v<T>) {
      return format_double(c.*member);
    } else {
      return std::to_string(c.*member);
    }
  };
  return k;
}

}  // namespace

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = {
      field("d", &RunConfig::d, "code distance (odd, >= 3)"),
      field("rounds", &RunConfig::rounds, "syndrome rounds (0 = 2d)"),
      field("observable", &RunConfig::observable, "X, Z or both"),
      field("method", &RunConfig::method, "mc, subset or split"),
      field("p", &RunConfig::p, "physical error rate for mc and subset"),
      field("p_start", &RunConfig::p_start, "first schedule point"),
      field("p_target", &RunConfig::p_target, "last schedule point"),
      field("column", &RunConfig::column, "plaquette column with scaled noise (-2 = none)"),
      field("column_factor", &RunConfig::column_factor, "noise multiplier on that column"),
      field("schedule", &RunConfig::schedule, "default, every-other, every-4th, endpoints or twice"),
      field("points", &RunConfig::points, "explicit comma-separated schedule"),
      field("census", &RunConfig::census, "gates or edges"),
      field("chains", &RunConfig::chains, "Markov chains per point"),
      field("min_jumps", &RunConfig::min_jumps, "jumps required per chain"),
      field("min_chains_ok", &RunConfig::min_chains_ok, "chains that must reach min_jumps"),
      field("min_samples", &RunConfig::min_samples, "samples required per chain"),
      field("rhat_target", &RunConfig::rhat_target, "largest accepted Gelman-Rubin R-hat"),
      field("burn_in", &RunConfig::burn_in, "burn-in proposals, in units of G"),
      field("sample_interval", &RunConfig::sample_interval, "proposals between samples, in units of G"),
      field("max_proposals", &RunConfig::max_proposals, "per-point proposal cap, in units of G"),
      field("weights", &RunConfig::weights, "frozen or per-point decoder weights"),
      field("expire_events", &RunConfig::expire_events, "fresh samples for every ratio"),
      field("stop_failures", &RunConfig::stop_failures, "Monte Carlo failures to stop at"),
      field("max_shots", &RunConfig::max_shots, "Monte Carlo shot cap"),
      field("setup_failures", &RunConfig::setup_failures, "failures in the splitting setup run"),
      field("subset_max_weight", &RunConfig::subset_max_weight, "largest subset-sampling stratum"),
      field("shots_per_weight", &RunConfig::shots_per_weight, "subset-sampling draws per stratum"),
      field("decode_rounds", &RunConfig::decode_rounds, "rounds committed by the first decode (0 = d)"),
      field("seed", &RunConfig::seed, "master seed"),
      field("output", &RunConfig::output, "CSV output path"),
      field("record_timing", &RunConfig::record_timing, "write wall-clock seconds"),
  };
  return keys;
}

void set_config_value(RunConfig& config, std::string_view key, std::string_view value) {
  for (const ConfigKey& k : config_keys()) {
    if (k.name == key) {
      k.set(config, trim(value));
      return;
    }
  }
  throw InvalidParameter("unknown config key: " + std::string(key));
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidParameter("config line " + std::to_string(line_no) + ": expected key = value");
    }
    set_config_value(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::string serialize_config(const RunConfig& config) {
  std::string out;
  for (const ConfigKey& k : config_keys()) out += k.name + " = " + k.get(config) + "\n";
  return out;
}

void validate_config(const RunConfig& c) {
  auto fail = [](const std::string& msg) { throw InvalidParameter(msg); };
  if (c.d < 3 || c.d % 2 == 0) fail("d must be odd and at least 3");
  if (c.rounds < 0) fail("rounds must be non-negative");
  if (c.observable != "X" && c.observable != "Z" && c.observable != "both") fail("observable must be X, Z or both");
  if (c.method != "mc" && c.method != "subset" && c.method != "split") fail("method must be mc, subset or split");
  auto prob = [&](double v, const char* name) {
    if (!(v > 0.0 && v < 1.0)) fail(std::string(name) + " must lie in (0, 1)");
  };
  prob(c.p, "p");
  prob(c.p_start, "p_start");
  prob(c.p_target, "p_target");
  if (c.p_target > c.p_start) fail("p_target must not exceed p_start");
  for (double x : c.points) prob(x, "schedule point");
  if (!(c.column_factor > 0.0)) fail("column_factor must be positive");
  if (c.schedule != "default" && c.schedule != "every-other" && c.schedule != "every-4th" &&
      c.schedule != "endpoints" && c.schedule != "twice") {
    fail("unknown schedule variant: " + c.schedule);
  }
  if (c.census != "gates" && c.census != "edges") fail("census must be gates or edges");
  if (c.weights != "frozen" && c.weights != "per-point") fail("weights must be frozen or per-point");
  if (c.chains < 2) fail("chains must be at least 2");
  if (c.min_chains_ok > c.chains) fail("min_chains_ok exceeds chains");
  if (c.min_samples < 2) fail("min_samples must be at least 2");
  if (!(c.rhat_target >= 1.0)) fail("rhat_target must be at least 1");
  if (!(c.burn_in >= 0.0) || !(c.sample_interval > 0.0) || !(c.max_proposals > 0.0)) {
    fail("burn_in, sample_interval and max_proposals must be positive");
  }
  if (c.stop_failures < 2 || c.setup_failures < 2) fail("failure targets must be at least 2");
  if (c.subset_max_weight < 1 || c.shots_per_weight < 1) fail("subset sampling needs positive sizes");
  if (c.output.empty()) fail("output path must not be empty");
}

int effective_rounds(const RunConfig& config) { return config.rounds == 0 ? 2 * config.d : config.rounds; }

}  // namespace qecsplit::cli
