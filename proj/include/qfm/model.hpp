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
 * Data-reuploading model assembly and evaluation.
 *
 * A model with L layers is the interleaving
 *     W_(L+1) S(x) W_(L) ... W_(2) S(x) W_(1)
 * of trainable blocks from the ansatz library with encoding blocks S(x), one
 * single-axis Pauli rotation per qubit carrying the unscaled scalar input x.
 * Its output f(x) = <0| U^dag(x) O U(x) |0> is a truncated Fourier series
 * with integer frequencies.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qfm/ansatz.hpp"
#include "qfm/circuit.hpp"
#include "qfm/noise.hpp"
#include "qfm/pauli.hpp"
#include "qfm/rng.hpp"
#include "qfm/state.hpp"

namespace qfm {

struct ModelConfig {
    AnsatzSpec ansatz;
    /// Per-qubit encoding axis; length 1 broadcasts to all qubits.
    std::vector<PauliAxis> encoding_axes = {PauliAxis::X};
    PauliString observable = PauliString::z(0);
    std::optional<NoiseParams> noise;
    std::uint64_t seed = 0;
};

/**
 * @brief Build the full model circuit: L+1 trainable blocks, L encoding
 * blocks, encoding_gate_count = n_qubits * L.
 */
inline CircuitIR construct(const ModelConfig& config) {
    validate_spec(config.ansatz);
    const std::size_t n = config.ansatz.n_qubits;
    const std::size_t layers = config.ansatz.n_layers;
    if (config.encoding_axes.size() != 1 &&
        config.encoding_axes.size() != n) {
        throw std::invalid_argument(
            "encoding axis list must have length 1 or n_qubits");
    }
    if (!config.observable.factors.empty() &&
        config.observable.max_wire() >= n) {
        throw std::invalid_argument("observable wire out of range");
    }
    const auto axis_for = [&](std::size_t q) {
        return config.encoding_axes.size() == 1 ? config.encoding_axes[0]
                                                : config.encoding_axes[q];
    };

    CircuitIR ir;
    ir.n_qubits = n;
    ir.param_count = parameter_count(config.ansatz);
    for (std::size_t layer = 0; layer < layers; ++layer) {
        ir.append_all(build_ansatz(config.ansatz, layer));
        for (std::size_t q = 0; q < n; ++q) {
            ir.append(TaggedGate::encoding(axis_rotation(axis_for(q)), q));
        }
    }
    ir.append_all(build_ansatz(config.ansatz, layers));
    return ir;
}

/**
 * @brief i.i.d. uniform [0, 2pi) parameter vectors.
 *
 * Sample i draws from rng.substream(i), so the list is reproducible and
 * independent of evaluation order.
 */
inline std::vector<std::vector<double>>
sample_parameters(const CircuitIR& ir, std::size_t n_samples,
                  const RngStream& rng) {
    if (n_samples < 1) {
        throw std::invalid_argument("n_samples must be >= 1");
    }
    std::vector<std::vector<double>> out(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        RngStream sub = rng.substream(i);
        out[i].resize(ir.param_count);
        for (double& v : out[i]) {
            v = sub.uniform_angle();
        }
    }
    return out;
}

/// The pure state U(x)|0...0>; noiseless path only.
inline QuantumState statevector(const CircuitIR& ir,
                                std::span<const double> params, double x) {
    return simulate_pure(bind_parameters(ir, params, x));
}

/**
 * @brief f(x) = <O> for the bound model, with optional noise.
 *
 * All-zero noise takes the identical pure path as no noise. Coherent-only
 * noise (gate_error_mu > 0, no channels) also stays on the pure simulator;
 * any incoherent channel switches to density-matrix evolution.
 */
inline double evaluate(const CircuitIR& ir, std::span<const double> params,
                       double x,
                       const PauliString& observable = PauliString::z(0),
                       const std::optional<NoiseParams>& noise = std::nullopt,
                       RngStream* rng = nullptr) {
    if (!noise.has_value() || noise->is_noiseless()) {
        return expectation(statevector(ir, params, x), observable);
    }
    noise->validate();
    if (noise->gate_error_mu > 0.0 && rng == nullptr) {
        throw std::invalid_argument(
            "coherent gate error requires an rng stream");
    }
    RngStream fallback(0);
    const CircuitIR bound = bind_parameters(ir, params, x);
    const NoisyProgram prog =
        compile_noisy(bound, *noise, rng != nullptr ? *rng : fallback);
    return expectation(run_program(prog), observable);
}

} // namespace qfm
