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

#include "aircomp/rng.hpp"

#include <cmath>

namespace aircomp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t Rng::derive_seed(std::uint64_t master_seed,
                               std::uint64_t stream_index) {
  return splitmix64(master_seed ^ splitmix64(stream_index));
}

double Rng::uniform01() {
  // Top 53 bits scaled by 2^-53; the result is always < 1.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t bound) {
  if (bound == UINT64_MAX) return gen_();
  const std::uint64_t width = bound + 1;
  // Reject the partial block at the bottom of the 2^64 range so that the
  // modulo map is exactly uniform.
  const std::uint64_t reject_below = (-width) % width;
  for (;;) {
    const std::uint64_t r = gen_();
    if (r >= reject_below) return r % width;
  }
}

double Rng::normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1]: keeps the log finite
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::complex<double> Rng::complex_normal(double variance) {
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  // Box-Muller pair, each component N(0, variance/2).
  const double radius = std::sqrt(-variance * std::log(u1));
  return {radius * std::cos(kTwoPi * u2), radius * std::sin(kTwoPi * u2)};
}

}  // namespace aircomp
