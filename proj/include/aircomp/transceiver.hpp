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

#ifndef AIRCOMP_TRANSCEIVER_HPP
#define AIRCOMP_TRANSCEIVER_HPP

#include "aircomp/channel.hpp"

namespace aircomp {

/// Per-subcarrier quantities shared by the combiner update and the
/// position-only objective.
struct SubcarrierWorkspace {
  RVec precoder_power;  // |b_{k,n}|^2, the diagonal of B_n
  CVec b_bar;           // [b_{1,n}, ..., b_{K,n}]^T
  CMat V;               // H_n B_n H_n^H + sigma^2 I, Hermitian positive definite
  double xi = 0.0;      // K - b̄^H H^H V^{-1} H b̄: the MSE at the optimal combiner
};

SubcarrierWorkspace subcarrier_workspace(const FrequencyChannel& fc,
                                         const CMat& precoders,
                                         double noise_power, int subcarrier);

/// Closed-form per-subcarrier precoder update given fixed combiners:
/// b_{k,n} = min(sqrt(P), |w_n^H h_{k,n}|^{-1}) exp(-j angle(w_n^H h_{k,n})).
/// A vanishing inner product yields sqrt(P) at zero phase (the phase is
/// immaterial there; a fixed choice keeps runs reproducible).
CMat update_precoders(const FrequencyChannel& fc, const CMat& combiners,
                      double power_budget);

/// Closed-form MMSE combiner bank: w_n = V_n^{-1} H_n b̄_n, solved by
/// Cholesky factorization of the Hermitian positive definite V_n.
/// Throws std::runtime_error if the solve produces non-finite values
/// (impossible for noise_power > 0 and finite inputs).
CMat update_combiners(const FrequencyChannel& fc, const CMat& precoders,
                      double noise_power);

/// sum_k |w_n^H h_{k,n} b_{k,n} - 1|^2 + sigma^2 ||w_n||^2, subcarrier 1-based.
double mse_per_subcarrier(const FrequencyChannel& fc, const CMat& precoders,
                          const CMat& combiners, double noise_power,
                          int subcarrier);

/// Mean of the per-subcarrier MSE over all N subcarriers.
double overall_mse(const FrequencyChannel& fc, const CMat& precoders,
                   const CMat& combiners, double noise_power);

/// sum_n b̄_n^H H_n^H V_n^{-1} H_n b̄_n: the quantity maximized by the
/// position step. With combiners set optimally,
/// overall_mse = (N*K - position_objective) / N.
double position_objective(const FrequencyChannel& fc, const CMat& precoders,
                          double noise_power);

}  // namespace aircomp

#endif  // AIRCOMP_TRANSCEIVER_HPP
