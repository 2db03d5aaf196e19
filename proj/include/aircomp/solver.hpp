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

#ifndef AIRCOMP_SOLVER_HPP
#define AIRCOMP_SOLVER_HPP

#include "aircomp/position_opt.hpp"

namespace aircomp {

struct SolveResult {
  TransceiverState state;
  AntennaLayout layout;
  std::vector<double> mse_trace;  // non-increasing; back() is the final MSE
  double mse = 0.0;
  int iterations = 0;         // outer alternating iterations
  int layouts_evaluated = 1;  // exhaustive search only: candidate subsets tried
};

/// Alternating precoder/combiner updates at a fixed layout. Starts from
/// full-power zero-phase precoders with the matching MMSE combiners, adopts
/// an update only when the measured MSE does not increase, and stops on
/// cfg.ao_tol relative improvement or cfg.max_ao_iters.
struct TransceiverAoResult {
  TransceiverState state;
  std::vector<double> mse_trace;
  int iterations = 0;
};

TransceiverAoResult alternate_transceivers(const FrequencyChannel& fc,
                                           const SystemConfig& cfg);

/// Reference fixed layout: for M = 4 the line (-3λ/2, 0), (-λ/2, 0),
/// (λ/2, 0), (3λ/2, 0); for other M a λ/2-spaced line centered at the
/// origin on the x-axis.
AntennaLayout fpa_layout(const SystemConfig& cfg);

/// 2M selection candidates: x in {(2i - M + 1) λ/2, i = 0..M-1},
/// y in {-λ/2, λ/2}. For M = 4 this is the 8-point lattice
/// x in {-3, -1, 1, 3} λ/2, y in {-1, 1} λ/2.
std::vector<Point2> eas_candidates(const SystemConfig& cfg);

/// Full alternating optimization: transceiver-only alternation at the fixed
/// reference layout first, then rounds of precoder update, combiner update
/// and the sequential majorization position step, each adopted only when
/// the overall MSE does not increase. The returned trace is non-increasing
/// and its tail never exceeds the fixed-layout solution for the same
/// channel.
SolveResult solve_proposed(const SystemConfig& cfg,
                           const ChannelRealization& chan);

/// Transceiver alternation at the fixed reference layout.
SolveResult solve_fpa(const SystemConfig& cfg, const ChannelRealization& chan);

/// Exhaustive antenna selection: runs the fixed-layout alternation on every
/// spacing-feasible M-subset of the 2M candidates and keeps the best.
SolveResult solve_eas(const SystemConfig& cfg, const ChannelRealization& chan);

}  // namespace aircomp

#endif  // AIRCOMP_SOLVER_HPP
