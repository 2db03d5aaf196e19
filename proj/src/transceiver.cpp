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

#include "aircomp/transceiver.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

namespace aircomp {

namespace {

CMat build_v(const CMat& Hn, const RVec& precoder_power, double noise_power) {
  const auto M = Hn.rows();
  CMat V = Hn * precoder_power.asDiagonal() * Hn.adjoint();
  V += noise_power * CMat::Identity(M, M);
  return V;
}

}  // namespace

SubcarrierWorkspace subcarrier_workspace(const FrequencyChannel& fc,
                                         const CMat& precoders,
                                         double noise_power, int subcarrier) {
  const CMat& Hn = channel_matrix(fc, subcarrier);
  SubcarrierWorkspace ws;
  ws.b_bar = precoders.col(subcarrier - 1);
  ws.precoder_power = ws.b_bar.cwiseAbs2();
  ws.V = build_v(Hn, ws.precoder_power, noise_power);
  const CVec rhs = Hn * ws.b_bar;
  const CVec u = ws.V.llt().solve(rhs);
  ws.xi = static_cast<double>(fc.num_users) - std::real(rhs.dot(u));
  return ws;
}

CMat update_precoders(const FrequencyChannel& fc, const CMat& combiners,
                      double power_budget) {
  const int K = fc.num_users;
  const int N = fc.num_subcarriers;
  const double amplitude_cap = std::sqrt(power_budget);
  CMat precoders(K, N);
  for (int n = 1; n <= N; ++n) {
    const CMat& Hn = channel_matrix(fc, n);
    const CVec inner = Hn.adjoint() * combiners.col(n - 1);  // conj(w^H h_k)
    for (int k = 0; k < K; ++k) {
      const Complex wh = std::conj(inner(k));  // w_n^H h_{k,n}
      const double mag = std::abs(wh);
      if (mag == 0.0) {
        precoders(k, n - 1) = amplitude_cap;
      } else {
        const double amplitude = std::min(amplitude_cap, 1.0 / mag);
        precoders(k, n - 1) = std::polar(amplitude, -std::arg(wh));
      }
    }
  }
  return precoders;
}

CMat update_combiners(const FrequencyChannel& fc, const CMat& precoders,
                      double noise_power) {
  const int M = fc.num_antennas;
  const int N = fc.num_subcarriers;
  CMat combiners(M, N);
  for (int n = 1; n <= N; ++n) {
    const CMat& Hn = channel_matrix(fc, n);
    const CVec b_bar = precoders.col(n - 1);
    const CMat V = build_v(Hn, b_bar.cwiseAbs2(), noise_power);
    combiners.col(n - 1) = V.llt().solve(Hn * b_bar);
  }
  if (!combiners.allFinite())
    throw std::runtime_error(
        "update_combiners: solve produced non-finite values");
  return combiners;
}

double mse_per_subcarrier(const FrequencyChannel& fc, const CMat& precoders,
                          const CMat& combiners, double noise_power,
                          int subcarrier) {
  const CMat& Hn = channel_matrix(fc, subcarrier);
  const CVec w = combiners.col(subcarrier - 1);
  const CVec residual = (Hn.adjoint() * w).conjugate().cwiseProduct(
                            precoders.col(subcarrier - 1)) -
                        CVec::Ones(fc.num_users);
  return residual.squaredNorm() + noise_power * w.squaredNorm();
}

double overall_mse(const FrequencyChannel& fc, const CMat& precoders,
                   const CMat& combiners, double noise_power) {
  double total = 0.0;
  for (int n = 1; n <= fc.num_subcarriers; ++n)
    total += mse_per_subcarrier(fc, precoders, combiners, noise_power, n);
  return total / static_cast<double>(fc.num_subcarriers);
}

double position_objective(const FrequencyChannel& fc, const CMat& precoders,
                          double noise_power) {
  double total = 0.0;
  for (int n = 1; n <= fc.num_subcarriers; ++n) {
    const CMat& Hn = channel_matrix(fc, n);
    const CVec b_bar = precoders.col(n - 1);
    const CMat V = build_v(Hn, b_bar.cwiseAbs2(), noise_power);
    const CVec rhs = Hn * b_bar;
    total += std::real(rhs.dot(V.llt().solve(rhs)));
  }
  return total;
}

}  // namespace aircomp
