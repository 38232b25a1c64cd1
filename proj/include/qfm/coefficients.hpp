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
 * Coefficient statistics over sampled parameter sets.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qfm/fourier_tree.hpp"
#include "qfm/model.hpp"
#include "qfm/parallel.hpp"
#include "qfm/rng.hpp"
#include "qfm/spectrum.hpp"

namespace qfm {

/// A frequency counts as present when its mean magnitude exceeds this.
inline constexpr double kSupportThreshold = 1e-10;

struct CoefficientStats {
    std::vector<int> frequencies;
    std::vector<double> mean_magnitudes; ///< mean |c_w| per frequency
    double grand_mean = 0.0;             ///< mean over all frequencies
    std::vector<int> support; ///< frequencies with mean |c_w| > threshold
};

/**
 * @brief Sample parameter vectors, compute |c_w| per sample and frequency
 * with the chosen engine, and average.
 */
inline CoefficientStats mean_coefficient_magnitudes(
    const CircuitIR& ir, std::size_t n_samples, const RngStream& rng,
    Spectrum::Method method = Spectrum::Method::analytical,
    const PauliString& observable = PauliString::z(0),
    unsigned n_threads = 1) {
    if (n_samples < 1) {
        throw std::invalid_argument("n_samples must be >= 1");
    }
    const auto samples = sample_parameters(ir, n_samples, rng);
    const std::size_t n_freq = 2 * max_frequency(ir) + 1;

    std::vector<std::vector<double>> magnitudes(
        n_samples, std::vector<double>(n_freq, 0.0));
    std::vector<int> frequencies;
    parallel_for(n_samples, n_threads, [&](std::size_t i) {
        const Spectrum spec =
            method == Spectrum::Method::dft
                ? dft_spectrum(ir, samples[i], observable)
                : analytical_spectrum(ir, samples[i], observable);
        for (std::size_t f = 0; f < n_freq; ++f) {
            magnitudes[i][f] = std::abs(spec.coefficients[f]);
        }
        if (i == 0) {
            frequencies = spec.frequencies;
        }
    });

    CoefficientStats stats;
    stats.frequencies = std::move(frequencies);
    stats.mean_magnitudes.assign(n_freq, 0.0);
    for (std::size_t i = 0; i < n_samples; ++i) {
        for (std::size_t f = 0; f < n_freq; ++f) {
            stats.mean_magnitudes[f] += magnitudes[i][f];
        }
    }
    double total = 0.0;
    for (std::size_t f = 0; f < n_freq; ++f) {
        stats.mean_magnitudes[f] /= static_cast<double>(n_samples);
        total += stats.mean_magnitudes[f];
        if (stats.mean_magnitudes[f] > kSupportThreshold) {
            stats.support.push_back(stats.frequencies[f]);
        }
    }
    stats.grand_mean = total / static_cast<double>(n_freq);
    return stats;
}

} // namespace qfm
