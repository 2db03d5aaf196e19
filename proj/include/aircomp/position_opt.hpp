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

#ifndef AIRCOMP_POSITION_OPT_HPP
#define AIRCOMP_POSITION_OPT_HPP

#include <optional>
#include <vector>

#include "aircomp/transceiver.hpp"

namespace aircomp {

// Majorization step for the position-only objective
// sum_n b̄_n^H H_n^H V_n^{-1} H_n b̄_n. Two stacked bounds produce a
// surrogate that is linear in the stacked field-response vector
// η = vec(F^H) and separable across antennas:
//
//   (1) first-order expansion of the jointly convex map
//       (A_1, A_2) -> tr(A_1^H A_2^{-1} A_1) at the current iterate, giving
//       2 Re{η^H ω_n} - tr(S_n V_n) per subcarrier, and
//   (2) the maximum-eigenvalue quadratic majorizer of η^H Ψ_n η with
//       Ψ_n = S_n^T ⊗ Λ_n and β_n = λmax(Ψ_n).
//
// Both bounds are tight at the expansion point, so the composed surrogate
// equals the true objective there and lower-bounds it everywhere else.
// The Kronecker matrix Ψ_n is never formed: Ψ_n η = vec(Λ_n F^H S_n), and
// β_n = λmax(S_n) λmax(Λ_n) exactly because both factors are PSD.

/// One subcarrier's share of the surrogate. Vectors of length K*L*M are
/// stored as KL x M matrices whose column m is the block tied to antenna m.
struct SubcarrierSurrogate {
  CMat S;          // M x M rank-one Gram form (V^{-1} H b̄)(V^{-1} H b̄)^H
  CMat Lambda;     // KL x KL block-diagonal G E_n B_n E_n^H G^H
  double beta = 0.0;     // λmax(S) · λmax(Λ)
  CMat omega;      // KL x M, ω_n = vec(G E_n b̄ b̄^H H^H V^{-1})
  CMat psi;        // KL x M, ψ_n = (Ψ_n - β_n I) η - ω_n
  double kappa = 0.0;    // constant of the eigenvalue majorizer
  double upsilon3 = 0.0; // objective share at the expansion point
};

SubcarrierSurrogate build_subcarrier_surrogate(const FrequencyChannel& fc,
                                               const CMat& precoders,
                                               double noise_power,
                                               int subcarrier);

/// Aggregated surrogate: the per-antenna objective is -2 Re{η(r_m)^H φ_m}
/// with φ_m = sum_n ψ_{n,m}; adding `constant` gives a global lower bound
/// on position_objective that is tight at the expansion point.
struct SurrogateCoefficients {
  CMat phi;                          // KL x M
  double constant = 0.0;             // sum_n κ_n
  double expansion_objective = 0.0;  // sum_n Υ_{3,n}
};

SurrogateCoefficients build_surrogate(const FrequencyChannel& fc,
                                      const CMat& precoders,
                                      double noise_power);

/// Plane-wave phase slopes: η_i(r) = exp(j (slope_x_i * x + slope_y_i * y))
/// for the stacked path index i = k*L + l.
struct PathPhases {
  RVec slope_x;  // K*L
  RVec slope_y;  // K*L
};

PathPhases path_phases(const ChannelRealization& chan, double wavelength);

/// η(r) = [f_1(r); ...; f_K(r)], length K*L.
CVec eta_at(const PathPhases& phases, const Point2& r);

/// sum_m -2 Re{η(r_m)^H φ_m}: the layout-dependent part of the surrogate.
double surrogate_linear_term(const PathPhases& phases, const CMat& phi,
                             const AntennaLayout& layout);

/// Linear term plus the layout-independent constant; lower-bounds
/// position_objective at every feasible layout.
double surrogate_value(const SurrogateCoefficients& coeffs,
                       const PathPhases& phases, const AntennaLayout& layout);

struct PositionGrid {
  std::vector<double> xs;  // ascending
  std::vector<double> ys;  // ascending
  double step = 0.0;
};

PositionGrid make_position_grid(const Region& region, double step);

/// Maximizes -2 Re{η(r)^H φ_m} over the lattice minus the open exclusion
/// disks (distance exactly min_spacing is admitted). Ties break toward the
/// smallest (x, y) in lexicographic order. Returns nullopt when every
/// lattice point is excluded.
std::optional<Point2> optimize_position(const PathPhases& phases,
                                        const CVec& phi_m,
                                        const PositionGrid& grid,
                                        const std::vector<Point2>& exclusions,
                                        double min_spacing);

struct MmStepResult {
  AntennaLayout layout;
  double objective = 0.0;  // position_objective at `layout`
  bool accepted = false;   // false: pass rejected, old layout retained
};

/// One majorization pass: builds the surrogate at the current layout, then
/// places antennas sequentially in index order, each excluding open disks
/// around the antennas already placed in this pass. The new layout is
/// adopted only when it is feasible and the true objective does not
/// decrease; otherwise the input layout is returned with accepted = false.
/// An antenna whose feasible lattice set is empty keeps its previous
/// position (the feasibility check then decides the pass).
MmStepResult mm_position_step(const AntennaLayout& layout,
                              const ChannelRealization& chan,
                              const SystemConfig& cfg, const CMat& precoders,
                              double noise_power);

struct MmRunResult {
  AntennaLayout layout;
  double objective = 0.0;
  int iterations = 0;
};

/// Repeats mm_position_step until the pass is rejected, the relative
/// objective improvement drops below cfg.mm_tol, or cfg.max_mm_iters passes
/// have run. The objective sequence is non-decreasing.
MmRunResult run_mm(const AntennaLayout& layout, const ChannelRealization& chan,
                   const SystemConfig& cfg, const CMat& precoders,
                   double noise_power);

}  // namespace aircomp

#endif  // AIRCOMP_POSITION_OPT_HPP
