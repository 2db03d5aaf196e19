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

#include "aircomp/position_opt.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aircomp {

SubcarrierSurrogate build_subcarrier_surrogate(const FrequencyChannel& fc,
                                               const CMat& precoders,
                                               double noise_power,
                                               int subcarrier) {
  const int K = fc.num_users;
  const int L = fc.num_paths;
  const int M = fc.num_antennas;
  const int KL = K * L;

  const CMat& Hn = channel_matrix(fc, subcarrier);
  const CVec b_bar = precoders.col(subcarrier - 1);
  const RVec b_power = b_bar.cwiseAbs2();

  CMat V = Hn * b_power.asDiagonal() * Hn.adjoint();
  V += noise_power * CMat::Identity(M, M);
  const CVec u = V.llt().solve(Hn * b_bar);  // V^{-1} H b̄

  SubcarrierSurrogate out;
  out.S = u * u.adjoint();
  const double lambda_max_s = u.squaredNorm();  // rank-one: λmax = trace

  // Λ_n is block diagonal with rank-one blocks |b_k|^2 a_k a_k^H where
  // a_k = g_k ⊙ e_{k,n}; its largest eigenvalue is the largest block norm.
  out.Lambda = CMat::Zero(KL, KL);
  CVec ge_b(KL);  // G E_n b̄: block k is b_k a_k
  double lambda_max_l = 0.0;
  for (int k = 0; k < K; ++k) {
    const CVec a = fc.ge_column(k, subcarrier);
    out.Lambda.block(k * L, k * L, L, L) = b_power(k) * (a * a.adjoint());
    lambda_max_l = std::max(lambda_max_l, b_power(k) * a.squaredNorm());
    ge_b.segment(k * L, L) = b_bar(k) * a;
  }
  out.beta = lambda_max_s * lambda_max_l;

  const CMat eta_mat = fc.F.adjoint();  // KL x M, column m = η(r_m)
  out.omega = ge_b * u.adjoint();
  const CMat psi_quad = out.Lambda * eta_mat * out.S;  // Ψ_n η as a matrix
  out.psi = psi_quad - out.beta * eta_mat - out.omega;

  // η^H Ψ η and the analytic ||η||^2 = K*L*M (unit-modulus entries).
  const double eta_quad =
      std::real((eta_mat.conjugate().cwiseProduct(psi_quad)).sum());
  const double eta_norm2 = static_cast<double>(KL * M);
  out.kappa = -2.0 * out.beta * eta_norm2 + eta_quad -
              noise_power * lambda_max_s;  // tr(S) = λmax for rank one
  out.upsilon3 = std::real((Hn * b_bar).dot(u));
  return out;
}

SurrogateCoefficients build_surrogate(const FrequencyChannel& fc,
                                      const CMat& precoders,
                                      double noise_power) {
  SurrogateCoefficients coeffs;
  coeffs.phi = CMat::Zero(fc.num_users * fc.num_paths, fc.num_antennas);
  for (int n = 1; n <= fc.num_subcarriers; ++n) {
    const SubcarrierSurrogate s =
        build_subcarrier_surrogate(fc, precoders, noise_power, n);
    coeffs.phi += s.psi;
    coeffs.constant += s.kappa;
    coeffs.expansion_objective += s.upsilon3;
  }
  return coeffs;
}

PathPhases path_phases(const ChannelRealization& chan, double wavelength) {
  const auto K = chan.elevations.rows();
  const auto L = chan.elevations.cols();
  const double scale = 2.0 * kPi / wavelength;
  PathPhases phases;
  phases.slope_x.resize(K * L);
  phases.slope_y.resize(K * L);
  for (Eigen::Index k = 0; k < K; ++k) {
    for (Eigen::Index l = 0; l < L; ++l) {
      phases.slope_x(k * L + l) =
          scale * std::sin(chan.elevations(k, l)) * std::cos(chan.azimuths(k, l));
      phases.slope_y(k * L + l) = scale * std::cos(chan.elevations(k, l));
    }
  }
  return phases;
}

CVec eta_at(const PathPhases& phases, const Point2& r) {
  const auto n = phases.slope_x.size();
  CVec eta(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    eta(i) = std::polar(1.0, phases.slope_x(i) * r.x + phases.slope_y(i) * r.y);
  }
  return eta;
}

double surrogate_linear_term(const PathPhases& phases, const CMat& phi,
                             const AntennaLayout& layout) {
  double total = 0.0;
  for (int m = 0; m < layout.size(); ++m) {
    total -= 2.0 * std::real(eta_at(phases, layout.positions[m]).dot(phi.col(m)));
  }
  return total;
}

double surrogate_value(const SurrogateCoefficients& coeffs,
                       const PathPhases& phases, const AntennaLayout& layout) {
  return surrogate_linear_term(phases, coeffs.phi, layout) + coeffs.constant;
}

namespace {

std::vector<double> lattice_axis(double lo, double hi, double step) {
  std::vector<double> values;
  const auto count =
      static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  values.reserve(static_cast<std::size_t>(count > 0 ? count : 0));
  for (long i = 0; i < count; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    if (v > hi) break;
    values.push_back(v);
  }
  return values;
}

}  // namespace

PositionGrid make_position_grid(const Region& region, double step) {
  if (!(step > 0.0))
    throw std::invalid_argument("make_position_grid: step must be > 0");
  PositionGrid grid;
  grid.step = step;
  grid.xs = lattice_axis(region.x_lo, region.x_hi, step);
  grid.ys = lattice_axis(region.y_lo, region.y_hi, step);
  return grid;
}

std::optional<Point2> optimize_position(const PathPhases& phases,
                                        const CVec& phi_m,
                                        const PositionGrid& grid,
                                        const std::vector<Point2>& exclusions,
                                        double min_spacing) {
  const auto nx = static_cast<Eigen::Index>(grid.xs.size());
  const auto ny = static_cast<Eigen::Index>(grid.ys.size());
  const auto KL = phi_m.size();

  // The objective factorizes along axes: -2 Re{η(r)^H φ} with
  // conj(η_i(r)) = exp(-j a_i x) exp(-j b_i y), so the whole lattice is one
  // complex product Cx^T diag(φ) Cy.
  CMat cx(KL, nx), cy(KL, ny);
  for (Eigen::Index i = 0; i < KL; ++i) {
    for (Eigen::Index ix = 0; ix < nx; ++ix)
      cx(i, ix) = std::polar(1.0, -phases.slope_x(i) * grid.xs[ix]);
    for (Eigen::Index iy = 0; iy < ny; ++iy)
      cy(i, iy) = std::polar(1.0, -phases.slope_y(i) * grid.ys[iy]);
  }
  const RMat objective =
      -2.0 * (cx.transpose() * phi_m.asDiagonal() * cy).real();

  bool found = false;
  double best = -std::numeric_limits<double>::infinity();
  Point2 best_point;
  for (Eigen::Index ix = 0; ix < nx; ++ix) {
    for (Eigen::Index iy = 0; iy < ny; ++iy) {
      const Point2 p{grid.xs[ix], grid.ys[iy]};
      bool excluded = false;
      for (const auto& c : exclusions) {
        if (distance(p, c) < min_spacing) {  // open disk
          excluded = true;
          break;
        }
      }
      if (excluded) continue;
      const double value = objective(ix, iy);
      if (!found || value > best) {  // strict: first best wins, lex order
        found = true;
        best = value;
        best_point = p;
      }
    }
  }
  if (!found) return std::nullopt;
  return best_point;
}

MmStepResult mm_position_step(const AntennaLayout& layout,
                              const ChannelRealization& chan,
                              const SystemConfig& cfg, const CMat& precoders,
                              double noise_power) {
  const FrequencyChannel fc = assemble_factors(layout, chan, cfg);
  const double objective_now = position_objective(fc, precoders, noise_power);
  const SurrogateCoefficients coeffs =
      build_surrogate(fc, precoders, noise_power);
  const PathPhases phases = path_phases(chan, cfg.wavelength);
  const PositionGrid grid = make_position_grid(cfg.region, cfg.grid_step);

  AntennaLayout candidate = layout;
  std::vector<Point2> placed;
  placed.reserve(static_cast<std::size_t>(layout.size()));
  for (int m = 0; m < layout.size(); ++m) {
    const auto point = optimize_position(phases, coeffs.phi.col(m), grid,
                                         placed, cfg.min_spacing);
    if (point) candidate.positions[m] = *point;
    // Empty feasible set: the antenna keeps its previous position and the
    // feasibility check below decides the whole pass.
    placed.push_back(candidate.positions[m]);
  }

  MmStepResult result;
  if (!layout_feasible(candidate, cfg.region, cfg.min_spacing)) {
    result.layout = layout;
    result.objective = objective_now;
    result.accepted = false;
    return result;
  }
  const FrequencyChannel fc_new = assemble_factors(candidate, chan, cfg);
  const double objective_new =
      position_objective(fc_new, precoders, noise_power);
  if (objective_new >= objective_now) {
    result.layout = std::move(candidate);
    result.objective = objective_new;
    result.accepted = true;
  } else {
    result.layout = layout;
    result.objective = objective_now;
    result.accepted = false;
  }
  return result;
}

MmRunResult run_mm(const AntennaLayout& layout, const ChannelRealization& chan,
                   const SystemConfig& cfg, const CMat& precoders,
                   double noise_power) {
  MmRunResult run;
  run.layout = layout;
  {
    const FrequencyChannel fc = assemble_factors(layout, chan, cfg);
    run.objective = position_objective(fc, precoders, noise_power);
  }
  for (int it = 0; it < cfg.max_mm_iters; ++it) {
    const MmStepResult step =
        mm_position_step(run.layout, chan, cfg, precoders, noise_power);
    ++run.iterations;
    if (!step.accepted) break;
    const double gain = step.objective - run.objective;
    run.layout = step.layout;
    run.objective = step.objective;
    if (gain <= cfg.mm_tol * std::max(std::abs(run.objective), 1e-300)) break;
  }
  return run;
}

}  // namespace aircomp
