// Copyright 2026 The Tempus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEMPUS_RANDOM_HPP
#define TEMPUS_RANDOM_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <span>

namespace tempus {

/// Philox4x32-10 block function (Salmon et al., Random123).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Counter-based stream keyed by a 64-bit seed. Independent streams are
/// addressed by a 64-bit stream id (e.g. a shot index), so shot k draws the
/// same numbers whether shots run serially or in parallel.
///
/// Satisfies UniformRandomBitGenerator.
class PhiloxStream {
 public:
  using result_type = std::uint32_t;

  PhiloxStream(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, n); n > 0.
  std::uint32_t below(std::uint32_t n);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
};

/// Index drawn from the discrete distribution with the given cumulative
/// weights (non-decreasing, last entry = total mass). Inverse-CDF, so the
/// result depends only on `u`.
std::size_t draw_from_cdf(std::span<const double> cumulative, double u);

}  // namespace tempus

#endif  // TEMPUS_RANDOM_HPP
