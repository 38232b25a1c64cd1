// Copyright 2026 The qfmkit developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Seedable random stream with derived substreams.
 *
 * Sample loops draw from `substream(i)` so that results are independent of
 * iteration order and thread count.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qfm {

namespace detail {

/// SplitMix64 finalizer, used to decorrelate derived seeds.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

/**
 * @brief Deterministic pseudo-random stream.
 *
 * Uniform doubles are built from the top 53 bits of a mt19937_64 draw, so a
 * given seed yields the same sequence on every platform.
 */
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed)
        : seed_{seed}, engine_{detail::splitmix64(seed)} {}

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    /// Uniform double in [0, 2*pi).
    double uniform_angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

    /// N(0, sigma^2) via Box-Muller; consumes exactly two engine draws.
    double gaussian(double sigma) {
        double u1 = uniform(0.0, 1.0);
        while (u1 == 0.0) {
            u1 = uniform(0.0, 1.0);
        }
        const double u2 = uniform(0.0, 1.0);
        return sigma * std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    /**
     * @brief Derived stream for sample `index`.
     *
     * Depends only on the original seed and the index, never on draws already
     * made, so substreams can be created in any order (or concurrently from
     * copies).
     */
    RngStream substream(std::uint64_t index) const {
        return RngStream{
            detail::splitmix64(seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)))};
    }

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace qfm
