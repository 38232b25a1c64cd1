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
 * Fourier spectrum extraction by equidistant sampling plus discrete Fourier
 * transform.
 *
 * Each Pauli-rotation encoding gate contributes spectral radius 1, so a model
 * with E encoding gates is a trigonometric polynomial of degree at most E.
 * Sampling it on the minimal Nyquist grid of M = 2E+1 equidistant points
 * recovers every coefficient exactly (up to float error); a direct O(M^2)
 * transform is used since M stays small.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qfm/circuit.hpp"
#include "qfm/model.hpp"
#include "qfm/noise.hpp"
#include "qfm/pauli.hpp"
#include "qfm/rng.hpp"

namespace qfm {

struct Spectrum {
    enum class Method { dft, analytical };

    Method method = Method::dft;
    /// Sorted ascending, symmetric about 0.
    std::vector<int> frequencies;
    std::vector<cdouble> coefficients;

    cdouble at(int omega) const {
        for (std::size_t i = 0; i < frequencies.size(); ++i) {
            if (frequencies[i] == omega) {
                return coefficients[i];
            }
        }
        return 0.0;
    }

    cdouble reconstruct_complex(double x) const {
        cdouble acc = 0.0;
        for (std::size_t i = 0; i < frequencies.size(); ++i) {
            acc += coefficients[i] *
                   std::exp(cdouble{0.0, static_cast<double>(frequencies[i]) * x});
        }
        return acc;
    }

    /// Re sum_w c_w e^{iwx}; the imaginary part vanishes for real models.
    double reconstruct(double x) const { return reconstruct_complex(x).real(); }
};

inline std::string_view to_string(Spectrum::Method m) {
    return m == Spectrum::Method::dft ? "dft" : "analytical";
}

/**
 * @brief Highest frequency the model can contain: the number of encoding
 * gates (n_qubits * n_layers for models built here).
 */
inline std::size_t max_frequency(const CircuitIR& ir) {
    std::size_t count = 0;
    for (const auto& tg : ir.gates) {
        if (tg.tag == GateTag::encoding) {
            if (gate_angle_count(tg.gate.kind) != 1) {
                throw std::invalid_argument(
                    "encoding gate is not a Pauli rotation");
            }
            ++count;
        }
    }
    if (count == 0) {
        throw std::invalid_argument(
            "circuit has no encoding gates; need n_layers >= 1");
    }
    return count;
}

/**
 * @brief Sample f on the Nyquist grid and transform.
 *
 * Returns coefficients for every omega in {-E, ..., E}. With noise configured
 * the sampled expectations come from the density-matrix path; grid point j
 * uses rng->substream(j) for any coherent-error draws.
 */
inline Spectrum dft_spectrum(const CircuitIR& ir,
                             std::span<const double> params,
                             const PauliString& observable = PauliString::z(0),
                             const std::optional<NoiseParams>& noise = {},
                             RngStream* rng = nullptr) {
    const std::size_t freq_max = max_frequency(ir);
    const std::size_t grid = 2 * freq_max + 1;
    std::vector<double> samples(grid);
    for (std::size_t j = 0; j < grid; ++j) {
        const double x =
            2.0 * std::numbers::pi * static_cast<double>(j) /
            static_cast<double>(grid);
        if (noise.has_value() && rng != nullptr) {
            RngStream sub = rng->substream(j);
            samples[j] = evaluate(ir, params, x, observable, noise, &sub);
        } else {
            samples[j] = evaluate(ir, params, x, observable, noise, rng);
        }
    }

    Spectrum spec;
    spec.method = Spectrum::Method::dft;
    spec.frequencies.reserve(grid);
    spec.coefficients.reserve(grid);
    for (int omega = -static_cast<int>(freq_max);
         omega <= static_cast<int>(freq_max); ++omega) {
        cdouble acc = 0.0;
        for (std::size_t j = 0; j < grid; ++j) {
            const double phase = -2.0 * std::numbers::pi * omega *
                                 static_cast<double>(j) /
                                 static_cast<double>(grid);
            acc += samples[j] * std::exp(cdouble{0.0, phase});
        }
        spec.frequencies.push_back(omega);
        spec.coefficients.push_back(acc / static_cast<double>(grid));
    }
    return spec;
}

} // namespace qfm
