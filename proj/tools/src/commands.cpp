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


#include "qecsplit_cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qecsplit/circuit.hpp"
#include "qecsplit/decoder.hpp"
#include "qecsplit/errors.hpp"
#include "qecsplit/fault_effects.hpp"
#include "qecsplit/malignancy.hpp"
#include "qecsplit/malignant_fraction.hpp"
#include "qecsplit/monte_carlo.hpp"
#include "qecsplit/parallel.hpp"
#include "qecsplit/schedule.hpp"
#include "qecsplit/splitting.hpp"
#include "qecsplit/subset_sampling.hpp"
#include "qecsplit_cli/plot.hpp"

namespace qecsplit::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Observable> observables_of(const std::string& text) {
  if (text == "both") return {Observable::kX, Observable::kZ};
  return {parse_observable(text)};
}

NoiseModel make_noise(const Circuit& circuit, const RunConfig& c, double p) {
  NoiseModel noise = NoiseModel::uniform(circuit, p);
  if (c.column != -2) noise = noise.with_column_multiplier(circuit, c.column, c.column_factor);
  return noise;
}

std::string dashed(std::string name) {
  for (char& ch : name) {
    if (ch == '_') ch = '-';
  }
  return name;
}

void summary(std::ostream& log, const ReportRow& r) {
  log << "p=" << format_number(r.p) << " observable=" << r.observable << " rate=" << format_number(r.rate);
  if (r.ratio) log << " ratio=" << format_number(*r.ratio);
  if (r.jumps_min) log << " jumps=" << *r.jumps_min << ".." << *r.jumps_max;
  log << " decoder_calls=" << r.decoder_calls;
  if (r.rhat) log << " rhat=" << format_number(*r.rhat);
  log << "\n";
}

Schedule make_schedule(const RunConfig& c, const Circuit& circuit, const NoiseModel& noise, Observable obs) {
  if (!c.points.empty()) return explicit_schedule(c.points);
  if (c.p_start == c.p_target) return explicit_schedule({c.p_start});
  double census = static_cast<double>(circuit.num_gates());
  if (c.census == "edges") census = static_cast<double>(build_decoding_graph(circuit, noise, obs).edges().size());
  return apply_variant(generate_schedule(c.p_start, c.p_target, c.d, census), parse_schedule_variant(c.schedule));
}

}  // namespace

RunOutcome execute_run(const RunConfig& c, std::ostream& log) {
  validate_config(c);
  const Circuit circuit = build_rotated_surface_code(c.d, effective_rounds(c));
  const FaultEffectTable effects(circuit);
  OracleOptions oracle_options;
  oracle_options.decode_rounds = static_cast<std::uint32_t>(c.decode_rounds);
  const std::size_t threads = default_thread_count();
  auto elapsed = [&](Clock::time_point t0) {
    return c.record_timing ? std::chrono::duration<double>(Clock::now() - t0).count() : 0.0;
  };

  RunOutcome outcome;
  for (Observable obs : observables_of(c.observable)) {
    const std::string name(observable_name(obs));
    const auto t0 = Clock::now();
    if (c.method == "mc" || c.method == "subset") {
      const NoiseModel noise = make_noise(circuit, c, c.p);
      const MalignancyOracle oracle(circuit, effects, noise, obs, oracle_options);
      ReportRow row;
      row.p = c.p;
      row.observable = name;
      if (c.method == "mc") {
        McOptions mo;
        mo.stop_failures = c.stop_failures;
        mo.max_shots = c.max_shots;
        mo.seed = c.seed;
        mo.threads = threads;
        try {
          const McResult r = mc_estimate(noise, oracle, mo);
          row.rate = r.rate;
          row.decoder_calls = r.evaluations;
        } catch (const PartialResultError& e) {
          row.rate = static_cast<double>(e.failures()) / static_cast<double>(e.shots());
          outcome.partial = true;
          log << "partial: " << e.what() << " (" << e.failures() << " failures in " << e.shots() << " shots)\n";
        }
      } else {
        SubsetOptions so;
        so.max_weight = c.subset_max_weight;
        so.shots_per_weight = c.shots_per_weight;
        so.seed = c.seed;
        so.threads = threads;
        const SubsetResult r = subset_sampling_estimate(noise, oracle, so);
        row.rate = r.rate;
        for (const SubsetStratum& s : r.strata) {
          row.decoder_calls += s.shots;
          if (s.zero_failures && s.weight > 0) {
            log << "note: weight " << s.weight << " stratum saw no failures in " << s.shots << " draws\n";
          }
        }
      }
      row.seconds = elapsed(t0);
      summary(log, row);
      outcome.rows.push_back(row);
      continue;
    }

    const NoiseModel noise = make_noise(circuit, c, c.p_start);
    const Schedule schedule = make_schedule(c, circuit, noise, obs);
    SplitOptions so;
    so.chains = c.chains;
    so.min_jumps = c.min_jumps;
    so.min_chains_ok = c.min_chains_ok;
    so.min_samples = c.min_samples;
    so.rhat_target = c.rhat_target;
    so.burn_in = c.burn_in;
    so.sample_interval = c.sample_interval;
    so.max_proposals = c.max_proposals;
    so.seed = c.seed;
    so.threads = threads;
    so.setup.stop_failures = c.setup_failures;
    so.setup.max_shots = c.max_shots;
    so.setup.seed = c.seed;
    so.weights = c.weights == "frozen" ? WeightPolicy::kFrozen : WeightPolicy::kPerPoint;
    so.expire_events = c.expire_events;
    so.oracle = oracle_options;
    const SplitReport rep = run_splitting(circuit, effects, noise, obs, schedule, so);

    ReportRow first;
    first.p = rep.points.front();
    first.observable = name;
    first.rate = rep.setup.rate;
    first.decoder_calls = rep.setup_decoder_calls;
    first.seconds = c.record_timing ? rep.setup_seconds : 0.0;
    summary(log, first);
    outcome.rows.push_back(first);
    for (const SplitStep& s : rep.steps) {
      ReportRow row;
      row.p = s.p_to;
      row.observable = name;
      row.rate = s.rate;
      row.ratio = s.ratio;
      row.jumps_min = s.jumps_min;
      row.jumps_max = s.jumps_max;
      row.decoder_calls = s.decoder_calls;
      row.rhat = s.rhat;
      row.seconds = c.record_timing ? s.seconds : 0.0;
      summary(log, row);
      if (!s.converged) log << "partial: step to p=" << format_number(s.p_to) << " hit the proposal cap\n";
      outcome.rows.push_back(row);
    }
    outcome.partial = outcome.partial || rep.partial;
  }
  return outcome;
}

namespace {

int cmd_run(const RunConfig& config, std::ostream& out) {
  const RunOutcome outcome = execute_run(config, out);
  std::ostringstream csv;
  write_report(csv, config, outcome.rows);
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw InvalidParameter("cannot write " + config.output);
  file << csv.str();
  return outcome.partial ? kExitPartial : kExitOk;
}

int cmd_plot(const std::vector<std::string>& inputs, const std::string& output, std::ostream& err) {
  if (inputs.empty()) {
    err << "plot: no input CSV files\n";
    return kExitError;
  }
  std::vector<PlotSeries> series;
  for (const std::string& path : inputs) {
    std::ifstream in(path);
    if (!in) {
      err << "plot: cannot read " << path << "\n";
      return kExitError;
    }
    const auto rows = read_report(in, path);
    const std::string stem = std::filesystem::path(path).stem().string();
    std::map<std::string, std::size_t> index;
    for (const ReportRow& r : rows) {
      auto [it, fresh] = index.emplace(r.observable, series.size());
      if (fresh) series.push_back({stem + " " + r.observable, {}});
      series[it->second].points.emplace_back(r.p, r.rate);
    }
  }
  const std::string svg = render_svg(series);
  std::ofstream file(output, std::ios::binary);
  if (!file) {
    err << "plot: cannot write " << output << "\n";
    return kExitError;
  }
  file << svg;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rare-event logical error rate estimation for rotated surface codes", "qecsplit"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Dump the syndrome-extraction circuit");
  int build_d = 3, build_rounds = 0;
  std::string basis = "Z", build_output, graph_observable;
  double graph_p = 1e-3;
  build->add_option("--d", build_d, "code distance");
  build->add_option("--rounds", build_rounds, "rounds (0 = 2d)");
  build->add_option("--basis", basis, "memory basis, Z or X");
  build->add_option("--output,-o", build_output, "output file (default stdout)");
  build->add_option("--graph", graph_observable, "also dump the decoding graph for observable X or Z");
  build->add_option("--p", graph_p, "physical rate for graph weights");

  // run
  auto* run = app.add_subcommand("run", "Estimate logical error rates");
  std::string config_path;
  run->add_option("--config,-c", config_path, "key = value config file; flags override it");
  std::map<std::string, std::string> overrides;
  for (const ConfigKey& k : config_keys()) {
    run->add_option("--" + dashed(k.name), overrides[k.name], k.help);
  }

  // plot
  auto* plot = app.add_subcommand("plot", "Render report CSVs as a log-log SVG");
  std::vector<std::string> plot_inputs;
  std::string plot_output = "plot.svg";
  plot->add_option("inputs", plot_inputs, "report CSV files");
  plot->add_option("--output,-o", plot_output, "SVG output path");

  // malignant-fraction
  auto* frac = app.add_subcommand("malignant-fraction", "Fraction of weight-k fault sets that are malignant");
  int frac_d = 3, frac_rounds = 0;
  std::size_t frac_k = 2;
  std::string frac_mode = "exhaustive", frac_obs = "Z";
  std::uint64_t frac_budget = 50'000'000, frac_seed = 1, frac_decode_rounds = 0;
  double frac_p = 1e-3;
  frac->add_option("--d", frac_d, "code distance");
  frac->add_option("--rounds", frac_rounds, "rounds (0 = 2d)");
  frac->add_option("--k", frac_k, "event weight");
  frac->add_option("--mode", frac_mode, "exhaustive or sampled");
  frac->add_option("--budget", frac_budget, "exhaustive event limit or sampled draws");
  frac->add_option("--observable", frac_obs, "X, Z or both");
  frac->add_option("--p", frac_p, "physical rate for decoder weights");
  frac->add_option("--seed", frac_seed, "seed for sampled mode");
  frac->add_option("--decode-rounds", frac_decode_rounds, "rounds committed by the first decode (0 = d)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitError;
  }

  try {
    if (build->parsed()) {
      const int rounds = build_rounds == 0 ? 2 * build_d : build_rounds;
      MemoryBasis b = MemoryBasis::kZ;
      if (basis == "X") {
        b = MemoryBasis::kX;
      } else if (basis != "Z") {
        throw InvalidParameter("basis must be Z or X");
      }
      const Circuit circuit = build_rotated_surface_code(build_d, rounds, b);
      std::string text = serialize_circuit(circuit);
      if (!graph_observable.empty()) {
        const NoiseModel noise = NoiseModel::uniform(circuit, graph_p);
        text += build_decoding_graph(circuit, noise, parse_observable(graph_observable)).dump();
      }
      if (build_output.empty()) {
        out << text;
      } else {
        std::ofstream file(build_output, std::ios::binary);
        if (!file) throw InvalidParameter("cannot write " + build_output);
        file << text;
      }
      return kExitOk;
    }
    if (run->parsed()) {
      RunConfig config;
      if (!config_path.empty()) config = load_config_file(config_path);
      for (const ConfigKey& k : config_keys()) {
        if (run->count("--" + dashed(k.name)) > 0) set_config_value(config, k.name, overrides[k.name]);
      }
      validate_config(config);
      return cmd_run(config, out);
    }
    if (plot->parsed()) return cmd_plot(plot_inputs, plot_output, err);
    if (frac->parsed()) {
      const int rounds = frac_rounds == 0 ? 2 * frac_d : frac_rounds;
      const Circuit circuit = build_rotated_surface_code(frac_d, rounds);
      const FaultEffectTable effects(circuit);
      const NoiseModel noise = NoiseModel::uniform(circuit, frac_p);
      FractionOptions fo;
      if (frac_mode == "sampled") {
        fo.mode = FractionMode::kSampled;
      } else if (frac_mode != "exhaustive") {
        throw InvalidParameter("mode must be exhaustive or sampled");
      }
      fo.budget = frac_budget;
      fo.seed = frac_seed;
      OracleOptions oo;
      oo.decode_rounds = static_cast<std::uint32_t>(frac_decode_rounds);
      out << "weight,observable,mode,malignant,total,fraction,ci_low,ci_high\n";
      for (Observable obs : observables_of(frac_obs)) {
        const MalignancyOracle oracle(circuit, effects, noise, obs, oo);
        const MalignantFraction f = malignant_fraction(circuit, oracle, frac_k, fo);
        out << f.weight << ',' << observable_name(obs) << ',' << frac_mode << ',' << f.malignant << ',' << f.total
            << ',' << format_number(f.fraction) << ',' << format_number(f.ci_low) << ','
            << format_number(f.ci_high) << "\n";
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace qecsplit::cli
