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

#include "aircomp/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aircomp {

double path_difference(const Point2& r, double elevation, double azimuth) {
  return r.x * std::sin(elevation) * std::cos(azimuth) +
         r.y * std::cos(elevation);
}

CVec field_response_vector(const Point2& r, int user,
                           const ChannelRealization& chan, double wavelength) {
  const auto L = chan.elevations.cols();
  CVec f(L);
  const double scale = 2.0 * kPi / wavelength;
  for (Eigen::Index l = 0; l < L; ++l) {
    const double rho =
        path_difference(r, chan.elevations(user, l), chan.azimuths(user, l));
    f(l) = std::polar(1.0, scale * rho);
  }
  return f;
}

CVec FrequencyChannel::e_column(int user, int subcarrier) const {
  CVec e(num_paths);
  const double scale = 1.0 / std::sqrt(static_cast<double>(num_subcarriers));
  for (int l = 0; l < num_paths; ++l) {
    const double phase = -2.0 * kPi * static_cast<double>(subcarrier) *
                         static_cast<double>(delays(user, l)) /
                         static_cast<double>(num_subcarriers);
    e(l) = std::polar(scale, phase);
  }
  return e;
}

CVec FrequencyChannel::ge_column(int user, int subcarrier) const {
  return g.segment(static_cast<Eigen::Index>(user) * num_paths, num_paths)
      .cwiseProduct(e_column(user, subcarrier));
}

FrequencyChannel assemble_factors(const AntennaLayout& layout,
                                  const ChannelRealization& chan,
                                  const SystemConfig& cfg) {
  const int K = cfg.num_users;
  const int L = cfg.num_paths;
  const int N = cfg.num_subcarriers;
  const int M = cfg.num_antennas;
  if (layout.size() != M)
    throw std::invalid_argument("assemble_factors: layout size mismatch");

  FrequencyChannel fc;
  fc.num_users = K;
  fc.num_paths = L;
  fc.num_subcarriers = N;
  fc.num_antennas = M;
  fc.delays = chan.delays;

  // Row m of F is the conjugated field response of antenna m, user-major.
  fc.F.resize(M, K * L);
  for (int m = 0; m < M; ++m) {
    for (int k = 0; k < K; ++k) {
      const CVec f =
          field_response_vector(layout.positions[m], k, chan, cfg.wavelength);
      for (int l = 0; l < L; ++l) fc.F(m, k * L + l) = std::conj(f(l));
    }
  }

  fc.g.resize(K * L);
  for (int k = 0; k < K; ++k) {
    for (int l = 0; l < L; ++l) fc.g(k * L + l) = chan.gains(k, l);
  }

  fc.H.resize(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    CMat Hn(M, K);
    for (int k = 0; k < K; ++k) {
      Hn.col(k) = fc.F.middleCols(k * L, L) * fc.ge_column(k, n);
    }
    fc.H[static_cast<std::size_t>(n - 1)] = std::move(Hn);
  }
  return fc;
}

const CMat& channel_matrix(const FrequencyChannel& fc, int subcarrier) {
  if (subcarrier < 1 || subcarrier > fc.num_subcarriers)
    throw std::out_of_range("channel_matrix: subcarrier index " +
                            std::to_string(subcarrier) + " not in [1, " +
                            std::to_string(fc.num_subcarriers) + "]");
  return fc.H[static_cast<std::size_t>(subcarrier - 1)];
}

}  // namespace aircomp
