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

#ifndef AIRCOMP_EXPERIMENT_HPP
#define AIRCOMP_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "aircomp/solver.hpp"

namespace aircomp {

enum class Scheme { Proposed, Fpa, Eas };

std::string scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);

enum class SweepVariable { SnrDb, NumUsers };

std::string sweep_name(SweepVariable sweep);

/// Monte-Carlo experiment description. `snr_db` sweeps set
/// power_budget = 10^(value/10) with noise_power fixed at 1; `num_users`
/// sweeps set K with the power at its configured value. Values must be
/// finite and strictly increasing.
struct ExperimentSpec {
  SweepVariable sweep = SweepVariable::SnrDb;
  std::vector<double> values;
  int trials = 50;
  std::vector<Scheme> schemes = {Scheme::Proposed, Scheme::Fpa, Scheme::Eas};
  std::string output_path = "results.csv";
};

/// Parses a JSON experiment document with keys: sweep ("snr_db" or
/// "num_users"), values (array), trials, schemes (array of scheme names),
/// output (path, optional). Unknown keys are rejected.
ExperimentSpec load_experiment_spec(const std::string& json_text);
ExperimentSpec load_experiment_spec_file(const std::string& path);

/// One CSV row. Rows with trial == -1 carry per-(scheme, sweep value) means
/// over all trials: mse and wall_time_s are averaged, iterations is the
/// rounded mean, and seed is the master seed of the run.
struct TrialResult {
  Scheme scheme = Scheme::Proposed;
  std::string sweep;
  double sweep_value = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  double mse = 0.0;
  int iterations = 0;
  double wall_time_s = 0.0;
};

struct ExperimentOptions {
  int threads = 1;
  /// Off by default so repeated runs with the same seed write identical
  /// files; when enabled, wall_time_s carries the measured solve time.
  bool measure_time = false;
};

/// Runs trials x sweep values x schemes. Within a trial all schemes see the
/// same channel draw (paired comparison); channels across (sweep value,
/// trial) pairs come from independent substreams derived from
/// cfg.rng_seed. Rows are returned in canonical order (sweep value, trial,
/// scheme), followed by the mean rows, independent of the thread count.
std::vector<TrialResult> run_experiment(const ExperimentSpec& spec,
                                        const SystemConfig& cfg,
                                        const ExperimentOptions& options = {});

/// Exact column order:
/// scheme,sweep_name,sweep_value,trial,seed,mse,iterations,wall_time_s
std::string csv_string(const std::vector<TrialResult>& rows);

/// Throws std::runtime_error when the path cannot be opened for writing.
void write_csv(const std::vector<TrialResult>& rows, const std::string& path);

}  // namespace aircomp

#endif  // AIRCOMP_EXPERIMENT_HPP
