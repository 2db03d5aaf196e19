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

#include "aircomp/ofdm.hpp"

#include <cmath>
#include <stdexcept>

#include "aircomp/channel.hpp"

namespace aircomp {

TimeDomainFrame modulate(const CMat& symbols, int cp_len) {
  const auto K = symbols.rows();
  const auto N = symbols.cols();
  if (cp_len < 0)
    throw std::invalid_argument("modulate: cp_len must be >= 0");
  if (cp_len > N)
    throw std::invalid_argument(
        "modulate: cp_len must not exceed the symbol length");

  TimeDomainFrame frame;
  frame.cp_len = cp_len;
  frame.num_subcarriers = static_cast<int>(N);
  frame.samples.resize(K, N + cp_len);

  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  for (Eigen::Index k = 0; k < K; ++k) {
    for (Eigen::Index t = 1; t <= N; ++t) {
      Complex acc = 0.0;
      for (Eigen::Index n = 1; n <= N; ++n) {
        const double phase = 2.0 * kPi * static_cast<double>(t) *
                             static_cast<double>(n) / static_cast<double>(N);
        acc += symbols(k, n - 1) * std::polar(1.0, phase);
      }
      frame.samples(k, cp_len + t - 1) = scale * acc;
    }
  }
  // Cyclic prefix: copy of the symbol tail (columns [N, N + cp_len) hold the
  // last cp_len useful samples).
  if (cp_len > 0)
    frame.samples.leftCols(cp_len) = frame.samples.middleCols(N, cp_len);
  return frame;
}

namespace {

/// Forward transform of the useful window with an arbitrary output scale.
CMat forward_transform(const CMat& useful, double scale) {
  const auto rows = useful.rows();
  const auto N = useful.cols();
  CMat out(rows, N);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index n = 1; n <= N; ++n) {
      Complex acc = 0.0;
      for (Eigen::Index t = 1; t <= N; ++t) {
        const double phase = -2.0 * kPi * static_cast<double>(t) *
                             static_cast<double>(n) / static_cast<double>(N);
        acc += useful(r, t - 1) * std::polar(1.0, phase);
      }
      out(r, n - 1) = scale * acc;
    }
  }
  return out;
}

}  // namespace

CMat demodulate(const TimeDomainFrame& frame) {
  const auto N = frame.num_subcarriers;
  const CMat useful = frame.samples.middleCols(frame.cp_len, N);
  return forward_transform(useful, 1.0 / std::sqrt(static_cast<double>(N)));
}

CMat propagate_and_demodulate(const TimeDomainFrame& frame,
                              const ChannelRealization& chan,
                              const AntennaLayout& layout, double wavelength) {
  const auto K = frame.samples.rows();
  const int N = frame.num_subcarriers;
  const int cp = frame.cp_len;
  const int M = layout.size();
  const int L = static_cast<int>(chan.delays.cols());
  if (chan.delays.maxCoeff() > cp)
    throw std::invalid_argument(
        "propagate_and_demodulate: cyclic prefix shorter than the maximum "
        "path delay");

  // Per-path spatial signatures h~_{k,l}: gain times the conjugated phase of
  // the relative propagation distance at each antenna.
  const double scale = 2.0 * kPi / wavelength;
  std::vector<CMat> taps(static_cast<std::size_t>(K));  // each M x L
  for (Eigen::Index k = 0; k < K; ++k) {
    CMat hk(M, L);
    for (int l = 0; l < L; ++l) {
      for (int m = 0; m < M; ++m) {
        const double rho = path_difference(layout.positions[m],
                                           chan.elevations(k, l),
                                           chan.azimuths(k, l));
        hk(m, l) = chan.gains(k, l) * std::polar(1.0, -scale * rho);
      }
    }
    taps[static_cast<std::size_t>(k)] = std::move(hk);
  }

  // Delay-line sum over the whole frame; samples before the frame start are
  // zero, which the prefix makes irrelevant inside the useful window.
  CMat received = CMat::Zero(M, N + cp);
  for (Eigen::Index k = 0; k < K; ++k) {
    for (int l = 0; l < L; ++l) {
      const int p = chan.delays(k, l);
      for (int i = p; i < N + cp; ++i) {
        received.col(i) += taps[static_cast<std::size_t>(k)].col(l) *
                           frame.samples(k, i - p);
      }
    }
  }

  const CMat useful = received.middleCols(cp, N);
  // 1/N receive scale; see the convention note in the header.
  return forward_transform(useful, 1.0 / static_cast<double>(N));
}

double model_equivalence_error(const SystemConfig& cfg,
                               const ChannelRealization& chan,
                               const AntennaLayout& layout, const CMat& symbols,
                               int cp_len) {
  const TimeDomainFrame frame = modulate(symbols, cp_len);
  const CMat z_time = propagate_and_demodulate(frame, chan, layout,
                                               cfg.wavelength);

  const FrequencyChannel fc = assemble_factors(layout, chan, cfg);
  CMat z_freq(cfg.num_antennas, cfg.num_subcarriers);
  for (int n = 1; n <= cfg.num_subcarriers; ++n) {
    z_freq.col(n - 1) = channel_matrix(fc, n) * symbols.col(n - 1);
  }

  double worst = 0.0;
  for (int n = 0; n < cfg.num_subcarriers; ++n) {
    const double denom = std::max(z_freq.col(n).norm(), 1e-300);
    worst = std::max(worst, (z_time.col(n) - z_freq.col(n)).norm() / denom);
  }
  return worst;
}

}  // namespace aircomp
