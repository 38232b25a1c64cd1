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
 * Entangling capability, via the Meyer-Wallach measure
 *
 *     Q(|psi>) = 2 (1 - 1/n sum_k Tr[rho_k^2])
 *
 * and via Bell measurements on a doubled register. The Bell route prepares
 * the state twice, applies CNOT(k -> k+n) and H(k) per pair, and uses
 * Tr[rho_k^2] = 1 - 2 P_odd,k where P_odd,k is the probability that qubits k
 * and k+n both read 1. Both routes compute the same quantity exactly, which
 * the tests pin per sample.
 *
 * Per-sample values below 1e-12 collapse to exactly 0: that is the double
 * precision noise floor of the purity sums, far below every tolerance used
 * here, and it keeps the measure's product-state fixed point exact.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qfm/circuit.hpp"
#include "qfm/model.hpp"
#include "qfm/parallel.hpp"
#include "qfm/rng.hpp"
#include "qfm/state.hpp"

namespace qfm {

struct EntanglementResult {
    enum class Method { meyer_wallach, bell };
    Method method = Method::meyer_wallach;
    double q_mean = 0.0;
    std::vector<double> q_per_sample;
    std::size_t n_samples = 0;
};

inline std::string_view to_string(EntanglementResult::Method m) {
    return m == EntanglementResult::Method::meyer_wallach ? "meyer_wallach"
                                                          : "bell";
}

namespace detail {

inline constexpr double kEntanglementNoiseFloor = 1e-12;

inline double snap_noise_floor(double q) {
    return q < kEntanglementNoiseFloor ? 0.0 : q;
}

inline void check_entanglement_args(const CircuitIR& ir,
                                    std::size_t n_samples) {
    if (ir.n_qubits < 2) {
        throw std::invalid_argument(
            "entangling capability needs >= 2 qubits");
    }
    if (n_samples < 1) {
        throw std::invalid_argument("n_samples must be >= 1");
    }
}

} // namespace detail

/**
 * @brief Meyer-Wallach measure averaged over sampled parameters.
 */
inline EntanglementResult meyer_wallach(const CircuitIR& ir,
                                        std::size_t n_samples, double x,
                                        const RngStream& rng,
                                        unsigned n_threads = 1) {
    detail::check_entanglement_args(ir, n_samples);
    EntanglementResult result;
    result.method = EntanglementResult::Method::meyer_wallach;
    result.n_samples = n_samples;
    result.q_per_sample.resize(n_samples);
    const auto samples = sample_parameters(ir, n_samples, rng);
    parallel_for(n_samples, n_threads, [&](std::size_t i) {
        const QuantumState state = statevector(ir, samples[i], x);
        double purity_sum = 0.0;
        for (std::size_t k = 0; k < ir.n_qubits; ++k) {
            purity_sum += subsystem_purity(state, k);
        }
        const double q =
            2.0 * (1.0 - purity_sum / static_cast<double>(ir.n_qubits));
        result.q_per_sample[i] = detail::snap_noise_floor(q);
    });
    double total = 0.0;
    for (double q : result.q_per_sample) {
        total += q;
    }
    result.q_mean = total / static_cast<double>(n_samples);
    return result;
}

/**
 * @brief The 2n-qubit Bell-measurement circuit: two copies of the circuit
 * sharing parameter slots, then CNOT(k -> k+n) and H(k) for every pair.
 */
inline CircuitIR bell_doubled_circuit(const CircuitIR& ir) {
    CircuitIR doubled;
    doubled.n_qubits = 2 * ir.n_qubits;
    doubled.param_count = ir.param_count;
    for (const auto& tg : ir.gates) {
        doubled.append(tg);
    }
    for (const auto& tg : ir.gates) {
        TaggedGate copy = tg;
        for (std::size_t& w : copy.gate.wires) {
            w += ir.n_qubits;
        }
        doubled.append(copy);
    }
    for (std::size_t k = 0; k < ir.n_qubits; ++k) {
        doubled.append(TaggedGate::fixed(Gate::cnot(k, k + ir.n_qubits)));
    }
    for (std::size_t k = 0; k < ir.n_qubits; ++k) {
        doubled.append(TaggedGate::fixed(Gate::h(k)));
    }
    return doubled;
}

/**
 * @brief Entangling capability from exact Bell-pair outcome probabilities on
 * the doubled register.
 */
inline EntanglementResult bell_entangling_capability(const CircuitIR& ir,
                                                     std::size_t n_samples,
                                                     double x,
                                                     const RngStream& rng,
                                                     unsigned n_threads = 1) {
    detail::check_entanglement_args(ir, n_samples);
    const CircuitIR doubled = bell_doubled_circuit(ir);
    EntanglementResult result;
    result.method = EntanglementResult::Method::bell;
    result.n_samples = n_samples;
    result.q_per_sample.resize(n_samples);
    const auto samples = sample_parameters(ir, n_samples, rng);
    parallel_for(n_samples, n_threads, [&](std::size_t i) {
        const QuantumState state = statevector(doubled, samples[i], x);
        double purity_sum = 0.0;
        for (std::size_t k = 0; k < ir.n_qubits; ++k) {
            const std::array<std::size_t, 2> pair{k, k + ir.n_qubits};
            const auto probs = measurement_probabilities(state, pair);
            const double p_odd = probs[3]; // both qubits of the pair read 1
            purity_sum += 1.0 - 2.0 * p_odd;
        }
        const double q =
            2.0 * (1.0 - purity_sum / static_cast<double>(ir.n_qubits));
        result.q_per_sample[i] = detail::snap_noise_floor(q);
    });
    double total = 0.0;
    for (double q : result.q_per_sample) {
        total += q;
    }
    result.q_mean = total / static_cast<double>(n_samples);
    return result;
}

} // namespace qfm
