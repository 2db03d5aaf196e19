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

#include "aircomp/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace aircomp {

namespace {

bool converged(double previous, double current, double tol) {
  return previous - current <= tol * std::max(std::abs(previous), 1e-300);
}

AntennaLayout validated_fixed_layout(const SystemConfig& cfg) {
  AntennaLayout layout = fpa_layout(cfg);
  if (!layout_feasible(layout, cfg.region, cfg.min_spacing))
    throw std::invalid_argument(
        "fpa layout infeasible for the configured region/min_spacing");
  return layout;
}

}  // namespace

TransceiverAoResult alternate_transceivers(const FrequencyChannel& fc,
                                           const SystemConfig& cfg) {
  const double P = cfg.power_budget;
  const double sigma2 = cfg.noise_power;

  TransceiverAoResult out;
  out.state.precoders =
      CMat::Constant(fc.num_users, fc.num_subcarriers, std::sqrt(P));
  out.state.combiners = update_combiners(fc, out.state.precoders, sigma2);
  double mse = overall_mse(fc, out.state.precoders, out.state.combiners, sigma2);
  out.mse_trace.push_back(mse);

  for (int it = 0; it < cfg.max_ao_iters; ++it) {
    CMat b = update_precoders(fc, out.state.combiners, P);
    CMat w = update_combiners(fc, b, sigma2);
    const double candidate = overall_mse(fc, b, w, sigma2);
    if (candidate > mse + 1e-9 * std::max(1.0, mse))
      throw std::logic_error("alternating update increased the MSE");
    if (candidate > mse) break;  // numerical convergence
    out.state.precoders = std::move(b);
    out.state.combiners = std::move(w);
    out.mse_trace.push_back(candidate);
    ++out.iterations;
    const bool done = converged(mse, candidate, cfg.ao_tol);
    mse = candidate;
    if (done) break;
  }
  return out;
}

AntennaLayout fpa_layout(const SystemConfig& cfg) {
  const int M = cfg.num_antennas;
  const double lambda = cfg.wavelength;
  AntennaLayout layout;
  layout.positions.reserve(static_cast<std::size_t>(M));
  if (M == 4) {
    layout.positions = {{-1.5 * lambda, 0.0},
                        {-0.5 * lambda, 0.0},
                        {0.5 * lambda, 0.0},
                        {1.5 * lambda, 0.0}};
  } else {
    for (int i = 0; i < M; ++i) {
      const double x =
          (static_cast<double>(i) - 0.5 * static_cast<double>(M - 1)) *
          lambda / 2.0;
      layout.positions.push_back({x, 0.0});
    }
  }
  return layout;
}

std::vector<Point2> eas_candidates(const SystemConfig& cfg) {
  const int M = cfg.num_antennas;
  const double half_lambda = cfg.wavelength / 2.0;
  std::vector<Point2> candidates;
  candidates.reserve(static_cast<std::size_t>(2 * M));
  for (int i = 0; i < M; ++i) {
    const double x = static_cast<double>(2 * i - M + 1) * half_lambda;
    candidates.push_back({x, -half_lambda});
    candidates.push_back({x, half_lambda});
  }
  return candidates;
}

SolveResult solve_fpa(const SystemConfig& cfg,
                      const ChannelRealization& chan) {
  const AntennaLayout layout = validated_fixed_layout(cfg);
  const FrequencyChannel fc = assemble_factors(layout, chan, cfg);
  TransceiverAoResult ao = alternate_transceivers(fc, cfg);

  SolveResult result;
  result.state = std::move(ao.state);
  result.layout = layout;
  result.mse_trace = std::move(ao.mse_trace);
  result.mse = result.mse_trace.back();
  result.iterations = ao.iterations;
  return result;
}

SolveResult solve_proposed(const SystemConfig& cfg,
                           const ChannelRealization& chan) {
  const double P = cfg.power_budget;
  const double sigma2 = cfg.noise_power;

  // Stage 1: transceiver alternation at the reference layout. Starting the
  // position rounds from this converged state makes the final MSE at most
  // the fixed-layout MSE on every channel draw.
  AntennaLayout layout = validated_fixed_layout(cfg);
  FrequencyChannel fc = assemble_factors(layout, chan, cfg);
  TransceiverAoResult ao = alternate_transceivers(fc, cfg);

  SolveResult result;
  result.state = std::move(ao.state);
  result.mse_trace = std::move(ao.mse_trace);
  result.iterations = ao.iterations;
  double mse = result.mse_trace.back();

  // Stage 2: precoders -> combiners -> antenna positions, with a combiner
  // refresh after each accepted move.
  for (int it = 0; it < cfg.max_ao_iters; ++it) {
    CMat b = update_precoders(fc, result.state.combiners, P);
    CMat w = update_combiners(fc, b, sigma2);

    const MmRunResult mm = run_mm(layout, chan, cfg, b, sigma2);
    const bool moved = mm.layout != layout;
    FrequencyChannel fc_candidate =
        moved ? assemble_factors(mm.layout, chan, cfg) : fc;
    if (moved) w = update_combiners(fc_candidate, b, sigma2);

    const double candidate = overall_mse(fc_candidate, b, w, sigma2);
    if (candidate > mse + 1e-9 * std::max(1.0, mse))
      throw std::logic_error("alternating update increased the MSE");
    if (candidate > mse) break;  // numerical convergence

    layout = mm.layout;
    fc = std::move(fc_candidate);
    result.state.precoders = std::move(b);
    result.state.combiners = std::move(w);
    result.mse_trace.push_back(candidate);
    ++result.iterations;
    const bool done = converged(mse, candidate, cfg.ao_tol);
    mse = candidate;
    if (done) break;
  }

  result.layout = std::move(layout);
  result.mse = mse;
  return result;
}

SolveResult solve_eas(const SystemConfig& cfg,
                      const ChannelRealization& chan) {
  const int M = cfg.num_antennas;
  std::vector<Point2> candidates = eas_candidates(cfg);
  // Candidates outside a user-supplied region cannot be selected.
  std::erase_if(candidates,
                [&](const Point2& p) { return !cfg.region.contains(p); });
  const int C = static_cast<int>(candidates.size());
  if (C < M)
    throw std::invalid_argument(
        "eas: fewer in-region candidates than antennas");

  SolveResult best;
  bool have_best = false;
  int evaluated = 0;

  // Lexicographic M-combinations of the candidate indices.
  std::vector<int> pick(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    AntennaLayout layout;
    layout.positions.reserve(static_cast<std::size_t>(M));
    for (int i : pick)
      layout.positions.push_back(candidates[static_cast<std::size_t>(i)]);
    if (min_pair_distance(layout) >= cfg.min_spacing) {
      const FrequencyChannel fc = assemble_factors(layout, chan, cfg);
      TransceiverAoResult ao = alternate_transceivers(fc, cfg);
      ++evaluated;
      const double mse = ao.mse_trace.back();
      if (!have_best || mse < best.mse) {
        have_best = true;
        best.state = std::move(ao.state);
        best.layout = std::move(layout);
        best.mse_trace = std::move(ao.mse_trace);
        best.mse = mse;
        best.iterations = ao.iterations;
      }
    }
    // Advance the combination.
    int i = M - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == C - M + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < M; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (!have_best)
    throw std::invalid_argument(
        "eas: no spacing-feasible candidate subset exists");
  best.layouts_evaluated = evaluated;
  return best;
}

}  // namespace aircomp
