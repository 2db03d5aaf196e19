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

#ifndef AIRCOMP_RNG_HPP
#define AIRCOMP_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace aircomp {

/// Deterministic random stream backed by std::mt19937_64.
///
/// All conversions from raw 64-bit draws to floating-point or bounded
/// integers are done explicitly, so a given seed produces the same sequence
/// on every standard library. Monte-Carlo trials get independent substreams
/// derived from (master seed, stream index) with splitmix64; substreams are
/// never shared between workers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static std::uint64_t derive_seed(std::uint64_t master_seed,
                                   std::uint64_t stream_index);
  static Rng substream(std::uint64_t master_seed, std::uint64_t stream_index) {
    return Rng(derive_seed(master_seed, stream_index));
  }

  std::uint64_t raw() { return gen_(); }

  /// Uniform on [0, 1) with 53-bit resolution; never returns 1.
  double uniform01();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Unbiased integer uniform on {0, 1, ..., bound} (inclusive).
  std::uint64_t uniform_int(std::uint64_t bound);

  /// Standard normal via Box-Muller (one pair drawn, second value unused).
  double normal();

  /// Circularly-symmetric complex Gaussian CN(0, variance).
  std::complex<double> complex_normal(double variance);

 private:
  std::mt19937_64 gen_;
};

}  // namespace aircomp

#endif  // AIRCOMP_RNG_HPP
