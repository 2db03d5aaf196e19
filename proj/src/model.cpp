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

#include "aircomp/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace aircomp {

double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<double> lattice_axis(double lo, double hi, double step) {
  std::vector<double> values;
  const auto count =
      static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  values.reserve(static_cast<std::size_t>(count > 0 ? count : 0));
  for (long i = 0; i < count; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    if (v > hi) break;  // guard against rounding past the boundary
    values.push_back(v);
  }
  return values;
}

}  // namespace

bool layout_in_region(const AntennaLayout& layout, const Region& region) {
  for (const auto& p : layout.positions) {
    if (!region.contains(p)) return false;
  }
  return true;
}

double min_pair_distance(const AntennaLayout& layout) {
  double best = std::numeric_limits<double>::infinity();
  const auto& pos = layout.positions;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      best = std::min(best, distance(pos[i], pos[j]));
    }
  }
  return best;
}

bool layout_feasible(const AntennaLayout& layout, const Region& region,
                     double min_spacing) {
  return layout_in_region(layout, region) &&
         min_pair_distance(layout) >= min_spacing;
}

bool region_admits_layout(const Region& region, double min_spacing,
                          double grid_step, int count) {
  if (count <= 0) return true;
  const auto xs = lattice_axis(region.x_lo, region.x_hi, grid_step);
  const auto ys = lattice_axis(region.y_lo, region.y_hi, grid_step);
  std::vector<Point2> placed;
  placed.reserve(static_cast<std::size_t>(count));
  for (double x : xs) {
    for (double y : ys) {
      const Point2 p{x, y};
      bool clear = true;
      for (const auto& q : placed) {
        if (distance(p, q) < min_spacing) {
          clear = false;
          break;
        }
      }
      if (!clear) continue;
      placed.push_back(p);
      if (static_cast<int>(placed.size()) >= count) return true;
    }
  }
  return false;
}

void SystemConfig::validate() const {
  require(num_users >= 1, "num_users: must be a positive integer");
  require(num_subcarriers >= 1, "num_subcarriers: must be a positive integer");
  require(num_antennas >= 1, "num_antennas: must be a positive integer");
  require(num_paths >= 1, "num_paths: must be a positive integer");
  require(std::isfinite(wavelength) && wavelength > 0.0,
          "wavelength: must be > 0");
  require(std::isfinite(min_spacing) && min_spacing >= 0.0,
          "min_spacing: must be >= 0");
  require(std::isfinite(power_budget) && power_budget > 0.0,
          "power_budget: must be > 0");
  require(std::isfinite(noise_power) && noise_power > 0.0,
          "noise_power: must be > 0");
  require(std::isfinite(grid_step) && grid_step > 0.0,
          "grid_step: must be > 0");
  require(region.x_lo <= region.x_hi && region.y_lo <= region.y_hi,
          "region: bounds must satisfy x_lo <= x_hi and y_lo <= y_hi");
  require(std::isfinite(region.x_lo) && std::isfinite(region.x_hi) &&
              std::isfinite(region.y_lo) && std::isfinite(region.y_hi),
          "region: bounds must be finite");
  require(max_ao_iters >= 1, "max_ao_iters: must be a positive integer");
  require(max_mm_iters >= 1, "max_mm_iters: must be a positive integer");
  require(std::isfinite(ao_tol) && ao_tol >= 0.0, "ao_tol: must be >= 0");
  require(std::isfinite(mm_tol) && mm_tol >= 0.0, "mm_tol: must be >= 0");
  require(max_delay >= 0, "max_delay: must be >= 0");
  // Delays must fit within one OFDM symbol for the circular model to hold.
  require(max_delay < num_subcarriers,
          "max_delay: must be smaller than num_subcarriers");
  require(region_admits_layout(region, min_spacing, grid_step, num_antennas),
          "min_spacing: region cannot hold num_antennas points at the "
          "required spacing (greedy packing check failed)");
}

ChannelRealization sample_channel(const SystemConfig& cfg, Rng& rng) {
  const int K = cfg.num_users;
  const int L = cfg.num_paths;
  ChannelRealization chan;
  chan.gains.resize(K, L);
  chan.delays.resize(K, L);
  chan.elevations.resize(K, L);
  chan.azimuths.resize(K, L);
  const double gain_variance = 1.0 / static_cast<double>(L);
  for (int k = 0; k < K; ++k) {
    for (int l = 0; l < L; ++l) {
      chan.elevations(k, l) = kPi * rng.uniform01();
      chan.azimuths(k, l) = kPi * rng.uniform01();
      chan.gains(k, l) = rng.complex_normal(gain_variance);
      chan.delays(k, l) = static_cast<int>(
          rng.uniform_int(static_cast<std::uint64_t>(cfg.max_delay)));
    }
  }
  return chan;
}

}  // namespace aircomp
