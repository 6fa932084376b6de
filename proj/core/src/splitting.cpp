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


#include "qecsplit/splitting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>

#include "qecsplit/bennett.hpp"
#include "qecsplit/chain.hpp"
#include "qecsplit/errors.hpp"
#include "qecsplit/event.hpp"
#include "qecsplit/failure_cache.hpp"
#include "qecsplit/parallel.hpp"

namespace qecsplit {

std::vector<double> SplitReport::rates() const {
  std::vector<double> out{setup.rate};
  for (const SplitStep& s : steps) out.push_back(s.rate);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Samples drawn at one schedule point. d_next = log pi_{j+1}(E) - log pi_j(E),
// d_prev likewise toward j-1 (absent neighbours leave them at 0).
struct LevelRun {
  std::vector<std::vector<double>> d_next;
  std::vector<std::vector<double>> d_prev;
  std::vector<std::uint64_t> jumps;
  Histogram weights;
  std::uint64_t proposals = 0;
  bool converged = true;
};

// A decoder plus its cache for one weighting.
struct Classifier {
  std::unique_ptr<MalignancyOracle> oracle;
  std::unique_ptr<FailureCache> cache;
};

Classifier make_classifier(const Circuit& circuit, const FaultEffectTable& effects, const NoiseModel& weights,
                           Observable obs, const OracleOptions& options) {
  Classifier c;
  c.oracle = std::make_unique<MalignancyOracle>(circuit, effects, weights, obs, options);
  c.cache = std::make_unique<FailureCache>(*c.oracle);
  return c;
}

class Runner {
 public:
  Runner(const NoiseModel& noise, const Schedule& schedule, const SplitOptions& options)
      : options_(options), gates_(noise.num_gates()) {
    for (double p : schedule.points) noise_at_.push_back(noise.at(p));
    burn_in_ = static_cast<std::uint64_t>(std::ceil(options.burn_in * static_cast<double>(gates_)));
    interval_ = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::ceil(options.sample_interval * static_cast<double>(gates_))));
    cap_ = static_cast<std::uint64_t>(std::ceil(options.max_proposals * static_cast<double>(gates_)));
  }

  // Advances `states` at point j and collects samples. `stream` separates
  // repeated runs at the same point.
  LevelRun run(std::size_t j, std::uint64_t stream, std::vector<Event>& states,
               const EventClassifier& classifier) const {
    const std::size_t n = states.size();
    const NoiseModel& here = noise_at_[j];
    const NoiseModel* next = j + 1 < noise_at_.size() ? &noise_at_[j + 1] : nullptr;
    const NoiseModel* prev = j > 0 ? &noise_at_[j - 1] : nullptr;

    std::vector<ChainState> chains(n);
    for (std::size_t c = 0; c < n; ++c) {
      chains[c].event = states[c];
      chains[c].rng = make_rng(options_.seed, StreamTag::kChain, stream * n + c);
    }
    LevelRun out;
    out.d_next.resize(n);
    out.d_prev.resize(n);
    out.jumps.assign(n, 0);
    std::vector<std::vector<std::size_t>> sizes(n);

    parallel_for(n, options_.threads, [&](std::size_t c) {
      for (std::uint64_t s = 0; s < burn_in_; ++s) metropolis_step(chains[c], here, classifier);
      chains[c].jumps = 0;
    });

    std::uint64_t done = 0;
    for (;;) {
      // Fixed-size batches keep the stopping point independent of threads.
      parallel_for(n, options_.threads, [&](std::size_t c) {
        ChainState& ch = chains[c];
        for (std::uint64_t s = 0; s < interval_; ++s) metropolis_step(ch, here, classifier);
        const double lp = event_log_probability(ch.event, here);
        out.d_next[c].push_back(next ? event_log_probability(ch.event, *next) - lp : 0.0);
        out.d_prev[c].push_back(prev ? event_log_probability(ch.event, *prev) - lp : 0.0);
        sizes[c].push_back(ch.event.size());
      });
      done += interval_;
      std::size_t ok = 0;
      bool enough = true;
      for (std::size_t c = 0; c < n; ++c) {
        if (chains[c].jumps >= options_.min_jumps) ++ok;
        enough = enough && out.d_next[c].size() >= options_.min_samples;
      }
      if (ok >= options_.min_chains_ok && enough && mixed(next ? out.d_next : out.d_prev)) break;
      if (done >= cap_) {
        out.converged = false;
        break;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      states[c] = chains[c].event;
      out.jumps[c] = chains[c].jumps;
      out.proposals += chains[c].steps;
      for (std::size_t w : sizes[c]) ++out.weights[w];
    }
    return out;
  }

  const NoiseModel& noise_at(std::size_t j) const { return noise_at_[j]; }

 private:
  // R̂ gate. Chains that all sit on one constant value count as mixed.
  bool mixed(const std::vector<std::vector<double>>& chains) const {
    try {
      return gelman_rubin(chains) <= options_.rhat_target;
    } catch (const NumericalError&) {
      for (const auto& c : chains) {
        if (c.front() != chains.front().front()) return false;
      }
      return true;
    }
  }

  const SplitOptions& options_;
  std::size_t gates_;
  std::vector<NoiseModel> noise_at_;
  std::uint64_t burn_in_ = 0;
  std::uint64_t interval_ = 1;
  std::uint64_t cap_ = 0;
};

std::vector<double> flatten(const std::vector<std::vector<double>>& chains, std::size_t skip, bool negate) {
  std::vector<double> out;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    if (c == skip) continue;
    for (double x : chains[c]) out.push_back(negate ? -x : x);
  }
  return out;
}

double safe_rhat(const std::vector<std::vector<double>>& chains) {
  try {
    return gelman_rubin(chains);
  } catch (const std::exception&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

// Moves chains whose event is not malignant under `classifier` onto a
// malignant sibling's event. Only needed when the decoder changes per point.
void repair_states(std::vector<Event>& states, const EventClassifier& classifier) {
  std::vector<std::size_t> good;
  for (std::size_t c = 0; c < states.size(); ++c) {
    if (classifier.is_malignant(states[c])) good.push_back(c);
  }
  if (good.empty()) throw SetupError("no chain state is malignant under the reweighted decoder");
  for (std::size_t c = 0, k = 0; c < states.size(); ++c) {
    if (!classifier.is_malignant(states[c])) states[c] = states[good[k++ % good.size()]];
  }
}

}  // namespace

SplitReport run_splitting(const Circuit& circuit, const FaultEffectTable& effects, const NoiseModel& noise,
                          Observable obs, const Schedule& schedule, const SplitOptions& options) {
  if (schedule.points.empty()) throw InvalidParameter("splitting needs a non-empty schedule");
  for (std::size_t i = 1; i < schedule.points.size(); ++i) {
    if (!(schedule.points[i] < schedule.points[i - 1])) throw InvalidParameter("schedule must be decreasing");
  }
  if (options.chains < 2) throw InvalidParameter("splitting needs at least 2 chains");
  if (options.min_chains_ok > options.chains) throw InvalidParameter("min_chains_ok exceeds the chain count");
  if (options.min_samples < 2) throw InvalidParameter("min_samples must be at least 2");
  if (!(options.sample_interval > 0.0) || !(options.burn_in >= 0.0) || !(options.max_proposals > 0.0)) {
    throw InvalidParameter("burn-in, sample interval and proposal cap must be positive");
  }
  const std::size_t t = schedule.points.size();
  const std::size_t n = options.chains;

  // Decoders: one frozen at the geometric mean, or one per point.
  std::vector<Classifier> classifiers;
  if (options.weights == WeightPolicy::kFrozen) {
    const double p_mid = std::sqrt(schedule.points.front() * schedule.points.back());
    classifiers.push_back(make_classifier(circuit, effects, noise.at(p_mid), obs, options.oracle));
  } else {
    for (double p : schedule.points) {
      classifiers.push_back(make_classifier(circuit, effects, noise.at(p), obs, options.oracle));
    }
  }
  auto classifier_at = [&](std::size_t j) -> FailureCache& {
    return *classifiers[options.weights == WeightPolicy::kFrozen ? 0 : j].cache;
  };
  auto counters = [&] {
    std::array<std::uint64_t, 3> c{0, 0, 0};
    for (const Classifier& k : classifiers) {
      c[0] += k.cache->decoder_calls();
      c[1] += k.cache->hits();
      c[2] += k.cache->misses();
    }
    return c;
  };

  SplitReport report;
  report.observable = obs;
  report.points = schedule.points;

  const Runner runner(noise, schedule, options);
  const auto t_setup = Clock::now();
  McOptions setup = options.setup;
  setup.harvest = std::max(setup.harvest, n);
  if (setup.threads == 0) setup.threads = options.threads;
  // Uncached, so the cache and its counters only ever see chain queries and
  // stay independent of how far parallel setup blocks ran past the stop.
  report.setup = mc_estimate(runner.noise_at(0), *classifiers.front().oracle, setup);
  report.setup_seconds = seconds_since(t_setup);
  if (report.setup.harvested.empty()) throw SetupError("setup Monte Carlo found no malignant event");
  const auto base = counters();
  report.setup_decoder_calls = report.setup.evaluations;
  report.rate = report.setup.rate;
  report.rate_se = report.setup.standard_error;
  if (t == 1) return report;

  // Fewer harvested events than chains: chains share events, not streams.
  std::vector<Event> states(n);
  for (std::size_t c = 0; c < n; ++c) states[c] = report.setup.harvested[c % report.setup.harvested.size()];

  std::uint64_t stream = 0;
  auto run_level = [&](std::size_t j) {
    if (options.weights == WeightPolicy::kPerPoint) repair_states(states, classifier_at(j));
    LevelRun r = runner.run(j, stream++, states, classifier_at(j));
    SplitLevel lvl;
    lvl.p = schedule.points[j];
    lvl.weights = r.weights;
    lvl.jumps_min = *std::min_element(r.jumps.begin(), r.jumps.end());
    lvl.jumps_max = *std::max_element(r.jumps.begin(), r.jumps.end());
    lvl.converged = r.converged;
    return std::make_pair(std::move(r), lvl);
  };

  report.levels.resize(t);
  auto [current, first_level] = run_level(0);
  report.levels[0] = first_level;
  double rel_var = report.setup.rate > 0.0 ? std::pow(report.setup.standard_error / report.setup.rate, 2) : 0.0;
  double rate = report.setup.rate;
  auto before = base;
  std::uint64_t proposals_before = 0;
  report.proposals = current.proposals;

  for (std::size_t j = 0; j + 1 < t; ++j) {
    const auto t0 = Clock::now();
    SplitStep step;
    step.p_from = schedule.points[j];
    step.p_to = schedule.points[j + 1];
    if (options.expire_events && j > 0) {
      auto [again, lvl] = run_level(j);
      current = std::move(again);
      report.levels[j].converged = report.levels[j].converged && lvl.converged;
      report.proposals += current.proposals;
    }
    auto [after, next_level] = run_level(j + 1);
    report.levels[j + 1] = next_level;
    report.proposals += after.proposals;

    const auto side_i = flatten(current.d_next, n, false);
    const auto side_next = flatten(after.d_prev, n, true);
    const JackknifeResult jk = jackknife(n, [&](std::size_t skip) {
      return bennett_solve(flatten(current.d_next, skip, false), flatten(after.d_prev, skip, true)).ratio;
    });
    step.ratio = jk.estimate;
    step.ratio_se = jk.standard_error;
    rate *= step.ratio;
    if (step.ratio > 0.0) rel_var += std::pow(step.ratio_se / step.ratio, 2);
    step.rate = rate;
    step.rate_se = rate * std::sqrt(rel_var);
    step.samples_from = side_i.size();
    step.samples_to = side_next.size();
    step.jumps_min = std::min(*std::min_element(current.jumps.begin(), current.jumps.end()),
                              *std::min_element(after.jumps.begin(), after.jumps.end()));
    step.jumps_max = std::max(*std::max_element(current.jumps.begin(), current.jumps.end()),
                              *std::max_element(after.jumps.begin(), after.jumps.end()));
    step.rhat = std::max(safe_rhat(current.d_next), safe_rhat(after.d_prev));
    step.converged = current.converged && after.converged;
    report.partial = report.partial || !step.converged;

    const auto now = counters();
    step.decoder_calls = now[0] - before[0];
    step.cache_hits = now[1] - before[1];
    step.cache_misses = now[2] - before[2];
    before = now;
    step.proposals = report.proposals - proposals_before;
    proposals_before = report.proposals;
    step.seconds = seconds_since(t0);
    report.steps.push_back(step);
    current = std::move(after);
  }
  const auto end = counters();
  report.decoder_calls = end[0] - base[0];
  report.cache_hits = end[1] - base[1];
  report.cache_misses = end[2] - base[2];
  report.rate = rate;
  report.rate_se = rate * std::sqrt(rel_var);
  return report;
}

}  // namespace qecsplit
