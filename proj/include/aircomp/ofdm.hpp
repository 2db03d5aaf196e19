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

#ifndef AIRCOMP_OFDM_HPP
#define AIRCOMP_OFDM_HPP

#include "aircomp/model.hpp"

namespace aircomp {

// Time-domain OFDM reference chain, used as a correctness oracle for the
// frequency-domain model. Time and subcarrier indices are 1-based in the
// transform kernels, matching the rest of the library.
//
// Scaling conventions: modulate() uses the (1/sqrt(N)) inverse transform and
// demodulate() its unitary (1/sqrt(N)) inverse, so a loopback without a
// channel is the identity. The receive chain in propagate_and_demodulate()
// scales its transform by 1/N instead; paired with the transmit side this
// makes the end-to-end per-subcarrier gain equal the delay-phase path sum
// carrying the 1/sqrt(N) factor, i.e. z_n = sum_k h_{k,n} d_{k,n}.

/// One OFDM symbol per user: N + cp_len samples, the first cp_len of which
/// are the cyclic prefix (a copy of the symbol tail).
struct TimeDomainFrame {
  CMat samples;             // K x (N + cp_len)
  int cp_len = 0;
  int num_subcarriers = 0;  // N
};

/// Inverse transform of the K x N frequency symbols plus cyclic prefix.
TimeDomainFrame modulate(const CMat& symbols, int cp_len);

/// Strips the prefix and applies the unitary forward transform;
/// demodulate(modulate(d)) == d.
CMat demodulate(const TimeDomainFrame& frame);

/// Noiseless receive chain: applies the multipath delay taps sample by
/// sample across the frame, strips the prefix and transforms. Returns the
/// M x N matrix whose column n-1 is z_n. Throws std::invalid_argument when
/// the prefix is shorter than the largest path delay (the circular model
/// would not hold).
CMat propagate_and_demodulate(const TimeDomainFrame& frame,
                              const ChannelRealization& chan,
                              const AntennaLayout& layout, double wavelength);

/// Worst-case relative error between the time-domain chain and the
/// frequency-domain model z_n = sum_k h_{k,n} d_{k,n} over all subcarriers,
/// for one random symbol matrix. Exposed for the `validate` CLI command and
/// the acceptance suite.
double model_equivalence_error(const SystemConfig& cfg,
                               const ChannelRealization& chan,
                               const AntennaLayout& layout, const CMat& symbols,
                               int cp_len);

}  // namespace aircomp

#endif  // AIRCOMP_OFDM_HPP
