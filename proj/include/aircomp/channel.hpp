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

#ifndef AIRCOMP_CHANNEL_HPP
#define AIRCOMP_CHANNEL_HPP

#include <vector>

#include "aircomp/model.hpp"

namespace aircomp {

/// Per-subcarrier frequency channels H_n together with the geometry
/// factorization H_n = F * G * E_n.
///
/// F is M x (K*L) and holds the conjugated field responses (unit-modulus
/// entries); row m, column k*L+l belongs to antenna m, user k, path l.
/// G = diag(g) stacks the path gains user-major. E_n is the block-diagonal
/// delay-phase map with blocks e_{k,n}; it is applied through ge_column and
/// never materialized densely.
///
/// Subcarrier indices are 1-based in the math layer: the phase of e_{k,n}
/// is exp(-j 2π n p / N) with n in {1, ..., N}, stored at column n-1.
struct FrequencyChannel {
  int num_users = 0;        // K
  int num_paths = 0;        // L
  int num_subcarriers = 0;  // N
  int num_antennas = 0;     // M
  CMat F;                   // M x (K*L)
  CVec g;                   // K*L stacked path gains (diagonal of G)
  IMat delays;              // K x L integer sample delays
  std::vector<CMat> H;      // N entries, each M x K

  /// e_{k,n}: length-L vector (1/sqrt(N)) exp(-j 2π n p_{k,l} / N),
  /// subcarrier 1-based.
  CVec e_column(int user, int subcarrier) const;

  /// g_k ⊙ e_{k,n}: column k of G E_n restricted to its nonzero block.
  CVec ge_column(int user, int subcarrier) const;
};

/// Far-field relative propagation distance difference of a path seen from
/// position r: x sin(θ) cos(φ) + y cos(θ).
double path_difference(const Point2& r, double elevation, double azimuth);

/// Length-L receive field-response vector of `user` at position r: entries
/// exp(j 2π/λ ρ_{k,l}(r)), all unit modulus.
CVec field_response_vector(const Point2& r, int user,
                           const ChannelRealization& chan, double wavelength);

/// Builds F, G and the per-subcarrier channels for the given geometry.
/// Inputs are assumed pre-validated (feasible layout, matching dimensions).
FrequencyChannel assemble_factors(const AntennaLayout& layout,
                                  const ChannelRealization& chan,
                                  const SystemConfig& cfg);

/// H_n for 1-based subcarrier index n; throws std::out_of_range otherwise.
const CMat& channel_matrix(const FrequencyChannel& fc, int subcarrier);

}  // namespace aircomp

#endif  // AIRCOMP_CHANNEL_HPP
