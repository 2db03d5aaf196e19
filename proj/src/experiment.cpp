// SPDX-License-Identifier: Apache-2.0
//
// aircomp-fas: OFDM over-the-air computation with a 2D fluid antenna receiver
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "aircomp/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace aircomp {

std::string scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::Proposed: return "proposed";
    case Scheme::Fpa: return "fpa";
    case Scheme::Eas: return "eas";
  }
  throw std::logic_error("scheme_name: unreachable");
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "proposed") return Scheme::Proposed;
  if (name == "fpa") return Scheme::Fpa;
  if (name == "eas") return Scheme::Eas;
  throw std::invalid_argument("schemes: unknown scheme '" + name + "'");
}

std::string sweep_name(SweepVariable sweep) {
  return sweep == SweepVariable::SnrDb ? "snr_db" : "num_users";
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

void validate_spec(const ExperimentSpec& spec) {
  if (spec.trials < 1) fail("trials: must be >= 1");
  if (spec.values.empty()) fail("values: must be non-empty");
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    if (!std::isfinite(spec.values[i])) fail("values: must be finite");
    if (i > 0 && spec.values[i] <= spec.values[i - 1])
      fail("values: must be strictly increasing");
  }
  if (spec.sweep == SweepVariable::NumUsers) {
    for (double v : spec.values) {
      if (v < 1.0 || v != std::floor(v))
        fail("values: num_users sweep requires positive integers");
    }
  }
  if (spec.schemes.empty()) fail("schemes: must be non-empty");
  std::set<Scheme> seen;
  for (Scheme s : spec.schemes) {
    if (!seen.insert(s).second)
      fail("schemes: duplicate scheme '" + scheme_name(s) + "'");
  }
}

SystemConfig config_at(const SystemConfig& base, SweepVariable sweep,
                       double value) {
  SystemConfig cfg = base;
  if (sweep == SweepVariable::SnrDb) {
    cfg.noise_power = 1.0;
    cfg.power_budget = std::pow(10.0, value / 10.0);
  } else {
    cfg.num_users = static_cast<int>(value);
  }
  cfg.validate();
  return cfg;
}

SolveResult run_scheme(Scheme scheme, const SystemConfig& cfg,
                       const ChannelRealization& chan) {
  switch (scheme) {
    case Scheme::Proposed: return solve_proposed(cfg, chan);
    case Scheme::Fpa: return solve_fpa(cfg, chan);
    case Scheme::Eas: return solve_eas(cfg, chan);
  }
  throw std::logic_error("run_scheme: unreachable");
}

}  // namespace

ExperimentSpec load_experiment_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("experiment spec: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("experiment spec: document must be an object");

  static const std::set<std::string> kKnownKeys = {"sweep", "values", "trials",
                                                   "schemes", "output"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (kKnownKeys.count(key) == 0)
      fail("unknown experiment spec key: '" + key + "'");
  }

  ExperimentSpec spec;
  if (doc.contains("sweep")) {
    const auto s = doc.at("sweep").get<std::string>();
    if (s == "snr_db") spec.sweep = SweepVariable::SnrDb;
    else if (s == "num_users") spec.sweep = SweepVariable::NumUsers;
    else fail("sweep: must be 'snr_db' or 'num_users'");
  }
  if (doc.contains("values")) {
    if (!doc.at("values").is_array()) fail("values: must be an array");
    spec.values.clear();
    for (const auto& v : doc.at("values")) {
      if (!v.is_number()) fail("values: entries must be numbers");
      spec.values.push_back(v.get<double>());
    }
  }
  if (doc.contains("trials")) {
    if (!doc.at("trials").is_number_integer())
      fail("trials: must be an integer");
    spec.trials = doc.at("trials").get<int>();
  }
  if (doc.contains("schemes")) {
    if (!doc.at("schemes").is_array()) fail("schemes: must be an array");
    spec.schemes.clear();
    for (const auto& v : doc.at("schemes")) {
      if (!v.is_string()) fail("schemes: entries must be strings");
      spec.schemes.push_back(scheme_from_name(v.get<std::string>()));
    }
  }
  if (doc.contains("output")) {
    if (!doc.at("output").is_string()) fail("output: must be a string");
    spec.output_path = doc.at("output").get<std::string>();
  }
  validate_spec(spec);
  return spec;
}

ExperimentSpec load_experiment_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("experiment spec: cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_experiment_spec(buffer.str());
}

std::vector<TrialResult> run_experiment(const ExperimentSpec& spec,
                                        const SystemConfig& cfg,
                                        const ExperimentOptions& options) {
  validate_spec(spec);
  cfg.validate();

  const std::size_t num_values = spec.values.size();
  const std::size_t trials = static_cast<std::size_t>(spec.trials);
  const std::size_t num_schemes = spec.schemes.size();
  const std::size_t num_tasks = num_values * trials;
  const std::string sweep = sweep_name(spec.sweep);

  std::vector<TrialResult> rows(num_tasks * num_schemes);

  // Tasks are independent and write to fixed slots, so the output does not
  // depend on thread scheduling.
  std::atomic<std::size_t> next_task{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t task = next_task.fetch_add(1);
      if (task >= num_tasks) return;
      const std::size_t value_idx = task / trials;
      const std::size_t trial = task % trials;
      const double value = spec.values[value_idx];
      const SystemConfig point_cfg = config_at(cfg, spec.sweep, value);
      const std::uint64_t seed = Rng::derive_seed(cfg.rng_seed, task);
      Rng rng(seed);
      const ChannelRealization chan = sample_channel(point_cfg, rng);
      for (std::size_t s = 0; s < num_schemes; ++s) {
        const auto start = std::chrono::steady_clock::now();
        const SolveResult solved = run_scheme(spec.schemes[s], point_cfg, chan);
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        TrialResult& row = rows[task * num_schemes + s];
        row.scheme = spec.schemes[s];
        row.sweep = sweep;
        row.sweep_value = value;
        row.trial = static_cast<int>(trial);
        row.seed = seed;
        row.mse = solved.mse;
        row.iterations = solved.iterations;
        row.wall_time_s = options.measure_time ? elapsed.count() : 0.0;
      }
    }
  };

  const int thread_count = std::max(1, options.threads);
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Per-(sweep value, scheme) mean rows, appended after the trial rows.
  std::vector<TrialResult> means;
  means.reserve(num_values * num_schemes);
  for (std::size_t v = 0; v < num_values; ++v) {
    for (std::size_t s = 0; s < num_schemes; ++s) {
      double mse_sum = 0.0, time_sum = 0.0, iter_sum = 0.0;
      for (std::size_t trial = 0; trial < trials; ++trial) {
        const TrialResult& row = rows[(v * trials + trial) * num_schemes + s];
        mse_sum += row.mse;
        time_sum += row.wall_time_s;
        iter_sum += row.iterations;
      }
      TrialResult mean;
      mean.scheme = spec.schemes[s];
      mean.sweep = sweep;
      mean.sweep_value = spec.values[v];
      mean.trial = -1;
      mean.seed = cfg.rng_seed;
      mean.mse = mse_sum / static_cast<double>(trials);
      mean.iterations = static_cast<int>(
          std::llround(iter_sum / static_cast<double>(trials)));
      mean.wall_time_s = time_sum / static_cast<double>(trials);
      means.push_back(mean);
    }
  }
  rows.insert(rows.end(), means.begin(), means.end());
  return rows;
}

std::string csv_string(const std::vector<TrialResult>& rows) {
  std::string out =
      "scheme,sweep_name,sweep_value,trial,seed,mse,iterations,wall_time_s\n";
  char line[256];
  for (const TrialResult& row : rows) {
    std::snprintf(line, sizeof(line), "%s,%s,%.10g,%d,%llu,%.12e,%d,%.6f\n",
                  scheme_name(row.scheme).c_str(), row.sweep.c_str(),
                  row.sweep_value, row.trial,
                  static_cast<unsigned long long>(row.seed), row.mse,
                  row.iterations, row.wall_time_s);
    out += line;
  }
  return out;
}

void write_csv(const std::vector<TrialResult>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << csv_string(rows);
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace aircomp
