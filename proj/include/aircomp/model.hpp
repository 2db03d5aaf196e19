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

#ifndef AIRCOMP_MODEL_HPP
#define AIRCOMP_MODEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "aircomp/rng.hpp"

namespace aircomp {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using IMat = Eigen::MatrixXi;

constexpr double kPi = 3.1415926535897932384626433832795;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Point2& a, const Point2& b) {
  return a.x == b.x && a.y == b.y;
}
inline bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }

double distance(const Point2& a, const Point2& b);

/// Axis-aligned rectangular movable region, boundary included.
struct Region {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;

  bool contains(const Point2& p) const {
    return p.x >= x_lo && p.x <= x_hi && p.y >= y_lo && p.y <= y_hi;
  }
};

/// Scenario constants. Defaults reproduce the reference setup: 2.4 GHz
/// carrier (0.125 m wavelength), K=5 users, N=64 subcarriers, M=4 receive
/// antennas, L=4 paths per user, half-wavelength minimum spacing and a
/// [-3λ/2, 3λ/2]^2 movable region. Power is per user per subcarrier, linear
/// scale, with the noise power fixed at 1 so that power_budget equals the
/// operating SNR.
struct SystemConfig {
  int num_users = 5;         // K
  int num_subcarriers = 64;  // N
  int num_antennas = 4;      // M
  int num_paths = 4;         // L
  double wavelength = 0.125;
  double min_spacing = 0.0625;
  Region region{-0.1875, 0.1875, -0.1875, 0.1875};
  double power_budget = 10.0;
  double noise_power = 1.0;
  double grid_step = 0.125 / 20.0;
  int max_ao_iters = 100;
  int max_mm_iters = 30;
  double ao_tol = 1e-5;
  double mm_tol = 1e-6;
  std::uint64_t rng_seed = 0;
  int max_delay = 15;  // samples; must stay below num_subcarriers

  /// Throws std::invalid_argument naming the offending key.
  void validate() const;
};

/// One multipath draw: per-user, per-path complex gains, integer sample
/// delays and arrival angle pairs. Immutable after sampling.
struct ChannelRealization {
  CMat gains;       // K x L
  IMat delays;      // K x L, each in [0, max_delay]
  RMat elevations;  // K x L, radians in [0, pi)
  RMat azimuths;    // K x L, radians in [0, pi)
};

struct AntennaLayout {
  std::vector<Point2> positions;

  int size() const { return static_cast<int>(positions.size()); }
};

inline bool operator==(const AntennaLayout& a, const AntennaLayout& b) {
  return a.positions == b.positions;
}
inline bool operator!=(const AntennaLayout& a, const AntennaLayout& b) {
  return !(a == b);
}

bool layout_in_region(const AntennaLayout& layout, const Region& region);

/// Smallest pairwise distance; +inf for fewer than two antennas.
double min_pair_distance(const AntennaLayout& layout);

bool layout_feasible(const AntennaLayout& layout, const Region& region,
                     double min_spacing);

struct TransceiverState {
  CMat precoders;  // K x N, entry (k, n-1) = b_{k,n}
  CMat combiners;  // M x N, column n-1 = w_n
};

/// Greedy lattice packing probe: walks the grid-step lattice in (x, y)
/// lexicographic order and places points subject to the minimum spacing.
/// Returns true when `count` points fit. Used as the load-time feasibility
/// check for (region, min_spacing, num_antennas).
bool region_admits_layout(const Region& region, double min_spacing,
                          double grid_step, int count);

/// Draws angles i.i.d. uniform on [0, pi), gains i.i.d. CN(0, 1/L) and
/// integer delays uniform on {0, ..., max_delay}. Draw order is fixed
/// (user-major, path-minor; elevation, azimuth, gain, delay) so results are
/// reproducible for a given seed.
ChannelRealization sample_channel(const SystemConfig& cfg, Rng& rng);

}  // namespace aircomp

#endif  // AIRCOMP_MODEL_HPP
