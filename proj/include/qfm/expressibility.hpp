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
 * Expressibility: KL divergence between the model's sampled state-fidelity
 * distribution and the analytic Haar fidelity distribution.
 *
 * The Haar side uses the closed-form density (N-1)(1-F)^(N-2) for squared
 * overlaps (N = 2^n) integrated exactly per bin, so the only Monte-Carlo
 * error source is the model side. For the idle circuit all fidelities are 1
 * and the divergence is ln(n_bins) for one qubit; for n > 1 the analytic
 * binning makes the idle value (2^n - 1) * ln(n_bins).
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "qfm/circuit.hpp"
#include "qfm/model.hpp"
#include "qfm/parallel.hpp"
#include "qfm/rng.hpp"
#include "qfm/state.hpp"

namespace qfm {

struct FidelityHistogram {
    std::size_t n_bins = 0;
    std::vector<double> edges;       ///< n_bins + 1 edges spanning [0, 1]
    std::vector<double> model_probs; ///< empirical bin masses
    std::vector<double> haar_probs;  ///< analytic bin masses, all positive
};

/**
 * @brief Fidelities of `n_samples` independent pairs of uniformly sampled
 * parameter vectors at fixed input x.
 *
 * Pair i draws its two parameter vectors from substreams 2i and 2i+1.
 */
inline std::vector<double> sample_fidelities(const CircuitIR& ir,
                                             std::size_t n_samples, double x,
                                             const RngStream& rng,
                                             unsigned n_threads = 1) {
    if (n_samples < 2) {
        throw std::invalid_argument("fidelity sampling needs >= 2 samples");
    }
    std::vector<double> out(n_samples);
    parallel_for(n_samples, n_threads, [&](std::size_t i) {
        RngStream rng_a = rng.substream(2 * i);
        RngStream rng_b = rng.substream(2 * i + 1);
        std::vector<double> params_a(ir.param_count);
        std::vector<double> params_b(ir.param_count);
        for (double& v : params_a) {
            v = rng_a.uniform_angle();
        }
        for (double& v : params_b) {
            v = rng_b.uniform_angle();
        }
        out[i] = fidelity(statevector(ir, params_a, x),
                          statevector(ir, params_b, x));
    });
    return out;
}

/**
 * @brief Exact Haar bin masses: q_j = (1-F_j)^(N-1) - (1-F_{j+1})^(N-1) with
 * uniform edges F_j = j / n_bins and N = 2^n.
 */
inline std::vector<double> haar_bin_probabilities(std::size_t n_qubits,
                                                  std::size_t n_bins) {
    if (n_qubits < 1) {
        throw std::invalid_argument("haar bins need n_qubits >= 1");
    }
    if (n_bins < 2) {
        throw std::invalid_argument("need at least 2 bins");
    }
    const double exponent =
        static_cast<double>((std::size_t{1} << n_qubits) - 1);
    std::vector<double> probs(n_bins);
    for (std::size_t j = 0; j < n_bins; ++j) {
        const double lo = static_cast<double>(j) / static_cast<double>(n_bins);
        const double hi =
            static_cast<double>(j + 1) / static_cast<double>(n_bins);
        probs[j] = std::pow(1.0 - lo, exponent) - std::pow(1.0 - hi, exponent);
    }
    return probs;
}

/// Histogram fidelities into n_bins uniform bins; F = 1 lands in the last.
inline FidelityHistogram make_histogram(std::span<const double> fidelities,
                                        std::size_t n_qubits,
                                        std::size_t n_bins) {
    FidelityHistogram hist;
    hist.n_bins = n_bins;
    hist.edges.resize(n_bins + 1);
    for (std::size_t j = 0; j <= n_bins; ++j) {
        hist.edges[j] = static_cast<double>(j) / static_cast<double>(n_bins);
    }
    hist.model_probs.assign(n_bins, 0.0);
    for (double f : fidelities) {
        if (!(f >= 0.0 && f <= 1.0 + 1e-12)) {
            throw std::invalid_argument("fidelity outside [0, 1]");
        }
        auto bin = static_cast<std::size_t>(f * static_cast<double>(n_bins));
        if (bin >= n_bins) {
            bin = n_bins - 1;
        }
        hist.model_probs[bin] += 1.0;
    }
    for (double& p : hist.model_probs) {
        p /= static_cast<double>(fidelities.size());
    }
    hist.haar_probs = haar_bin_probabilities(n_qubits, n_bins);
    return hist;
}

/**
 * @brief D_KL(model || haar) = sum_j p_j ln(p_j / q_j), with 0 ln 0 = 0.
 */
inline double kl_divergence(const FidelityHistogram& hist) {
    if (hist.model_probs.size() != hist.haar_probs.size()) {
        throw std::invalid_argument("histogram size mismatch");
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < hist.model_probs.size(); ++j) {
        const double p = hist.model_probs[j];
        if (p == 0.0) {
            continue;
        }
        const double q = hist.haar_probs[j];
        if (q <= 0.0) {
            throw std::invalid_argument("haar bin mass must be positive");
        }
        acc += p * std::log(p / q);
    }
    return acc;
}

/**
 * @brief Full pipeline: sample fidelities, histogram, compare to Haar.
 *
 * Reports the divergence itself; expressibility readings that want "larger
 * is more expressive" invert it.
 */
inline double expressibility_kl(const CircuitIR& ir, std::size_t n_samples,
                                std::size_t n_bins, double x,
                                const RngStream& rng, unsigned n_threads = 1) {
    const auto fidelities =
        sample_fidelities(ir, n_samples, x, rng, n_threads);
    return kl_divergence(make_histogram(fidelities, ir.n_qubits, n_bins));
}

} // namespace qfm
