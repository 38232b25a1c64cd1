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
 * Dense pure-state / density-matrix simulation primitives.
 *
 * Conventions:
 *  - Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of
 *    the basis-state index.
 *  - A mixed state stores the 2^n x 2^n density matrix row-major as a flat
 *    vector. Gates act on it as U rho U^dagger by applying U to the row
 *    indices and conj(U) to the column indices; both reuse the statevector
 *    kernel on a doubled register.
 *  - Promotion from pure to mixed (first channel application) is one-way.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "qfm/gates.hpp"
#include "qfm/kraus.hpp"
#include "qfm/pauli.hpp"

namespace qfm {

namespace detail {

/**
 * @brief Apply a 2^k x 2^k matrix to the given wires of an n-qubit amplitude
 * vector. wires[0] is the most significant bit of the local index.
 */
inline void apply_matrix(std::vector<cdouble>& amps, std::size_t n_qubits,
                         const cdouble* mat,
                         std::span<const std::size_t> wires, bool conjugate) {
    const std::size_t k = wires.size();
    const std::size_t local_dim = std::size_t{1} << k;
    const std::size_t dim = std::size_t{1} << n_qubits;

    std::size_t target_mask = 0;
    std::vector<std::size_t> bit(k);
    for (std::size_t t = 0; t < k; ++t) {
        bit[t] = std::size_t{1} << (n_qubits - 1 - wires[t]);
        target_mask |= bit[t];
    }
    std::vector<std::size_t> offset(local_dim, 0);
    for (std::size_t p = 0; p < local_dim; ++p) {
        for (std::size_t t = 0; t < k; ++t) {
            if ((p >> (k - 1 - t)) & 1U) {
                offset[p] |= bit[t];
            }
        }
    }

    std::vector<cdouble> scratch(local_dim);
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & target_mask) {
            continue;
        }
        for (std::size_t p = 0; p < local_dim; ++p) {
            scratch[p] = amps[base | offset[p]];
        }
        for (std::size_t p = 0; p < local_dim; ++p) {
            cdouble acc = 0.0;
            const cdouble* row = mat + p * local_dim;
            for (std::size_t q = 0; q < local_dim; ++q) {
                acc += (conjugate ? std::conj(row[q]) : row[q]) * scratch[q];
            }
            amps[base | offset[p]] = acc;
        }
    }
}

} // namespace detail

/**
 * @brief Quantum register over n qubits, pure or mixed.
 */
class QuantumState {
  public:
    /// |0...0> as a pure state.
    static QuantumState zero_pure(std::size_t n_qubits) {
        QuantumState s;
        s.n_qubits_ = n_qubits;
        s.mixed_ = false;
        s.data_.assign(std::size_t{1} << n_qubits, 0.0);
        s.data_[0] = 1.0;
        return s;
    }

    /// Pure state from amplitudes; norm must be 1 within 1e-10.
    static QuantumState from_amplitudes(std::size_t n_qubits,
                                        std::vector<cdouble> amps) {
        if (amps.size() != (std::size_t{1} << n_qubits)) {
            throw std::invalid_argument("amplitude vector size mismatch");
        }
        double norm2 = 0.0;
        for (const auto& a : amps) {
            norm2 += std::norm(a);
        }
        if (std::abs(norm2 - 1.0) > 1e-10) {
            throw std::invalid_argument("state is not normalised");
        }
        QuantumState s;
        s.n_qubits_ = n_qubits;
        s.mixed_ = false;
        s.data_ = std::move(amps);
        return s;
    }

    /// Mixed state from a row-major density matrix; Hermitian and unit trace
    /// within 1e-10.
    static QuantumState from_density(std::size_t n_qubits,
                                     std::vector<cdouble> rho) {
        const std::size_t dim = std::size_t{1} << n_qubits;
        if (rho.size() != dim * dim) {
            throw std::invalid_argument("density matrix size mismatch");
        }
        cdouble tr = 0.0;
        double herm_err = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            tr += rho[r * dim + r];
            for (std::size_t c = 0; c < dim; ++c) {
                herm_err = std::max(
                    herm_err,
                    std::abs(rho[r * dim + c] - std::conj(rho[c * dim + r])));
            }
        }
        if (herm_err > 1e-10) {
            throw std::invalid_argument("density matrix is not Hermitian");
        }
        if (std::abs(tr - 1.0) > 1e-10) {
            throw std::invalid_argument("density matrix trace is not 1");
        }
        QuantumState s;
        s.n_qubits_ = n_qubits;
        s.mixed_ = true;
        s.data_ = std::move(rho);
        return s;
    }

    std::size_t n_qubits() const { return n_qubits_; }
    bool is_mixed() const { return mixed_; }
    std::size_t dim() const { return std::size_t{1} << n_qubits_; }
    const std::vector<cdouble>& data() const { return data_; }

    /// |psi> -> |psi><psi|. No-op on mixed states.
    void promote_to_mixed() {
        if (mixed_) {
            return;
        }
        const std::size_t d = dim();
        std::vector<cdouble> rho(d * d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                rho[r * d + c] = data_[r] * std::conj(data_[c]);
            }
        }
        data_ = std::move(rho);
        mixed_ = true;
    }

    double norm_squared() const {
        if (mixed_) {
            cdouble tr = 0.0;
            const std::size_t d = dim();
            for (std::size_t r = 0; r < d; ++r) {
                tr += data_[r * d + r];
            }
            return tr.real();
        }
        double n2 = 0.0;
        for (const auto& a : data_) {
            n2 += std::norm(a);
        }
        return n2;
    }

    friend void apply_gate(QuantumState& state, const Gate& gate);
    friend void apply_kraus(QuantumState& state, const KrausChannel& channel);

  private:
    std::size_t n_qubits_ = 0;
    bool mixed_ = false;
    std::vector<cdouble> data_;
};

/// In-place U|psi> or U rho U^dagger.
inline void apply_gate(QuantumState& state, const Gate& gate) {
    validate_gate(gate);
    for (std::size_t w : gate.wires) {
        if (w >= state.n_qubits()) {
            throw std::out_of_range("gate wire out of range");
        }
    }
    const auto mat = gate_matrix(gate);
    if (!state.mixed_) {
        detail::apply_matrix(state.data_, state.n_qubits_, mat.data(),
                             gate.wires, /*conjugate=*/false);
        return;
    }
    // Row side, then conjugate matrix on the column side.
    detail::apply_matrix(state.data_, 2 * state.n_qubits_, mat.data(),
                         gate.wires, /*conjugate=*/false);
    std::vector<std::size_t> col_wires(gate.wires);
    for (auto& w : col_wires) {
        w += state.n_qubits_;
    }
    detail::apply_matrix(state.data_, 2 * state.n_qubits_, mat.data(),
                         col_wires, /*conjugate=*/true);
}

/// In-place rho -> sum_i K_i rho K_i^dagger. Pure states are promoted first.
inline void apply_kraus(QuantumState& state, const KrausChannel& channel) {
    for (std::size_t w : channel.wires()) {
        if (w >= state.n_qubits()) {
            throw std::out_of_range("channel wire out of range");
        }
    }
    state.promote_to_mixed();
    std::vector<std::size_t> col_wires(channel.wires());
    for (auto& w : col_wires) {
        w += state.n_qubits_;
    }
    std::vector<cdouble> total(state.data_.size(), 0.0);
    for (const auto& op : channel.operators()) {
        std::vector<cdouble> term = state.data_;
        detail::apply_matrix(term, 2 * state.n_qubits_, op.data(),
                             channel.wires(), /*conjugate=*/false);
        detail::apply_matrix(term, 2 * state.n_qubits_, op.data(), col_wires,
                             /*conjugate=*/true);
        for (std::size_t i = 0; i < total.size(); ++i) {
            total[i] += term[i];
        }
    }
    state.data_ = std::move(total);
}

/**
 * @brief <O> for a weighted Pauli string; real by construction.
 */
inline double expectation(const QuantumState& state,
                          const PauliString& observable) {
    if (!observable.factors.empty() &&
        observable.max_wire() >= state.n_qubits()) {
        throw std::out_of_range("observable wire out of range");
    }
    std::vector<cdouble> work = state.data();
    const std::size_t kernel_qubits =
        state.is_mixed() ? 2 * state.n_qubits() : state.n_qubits();
    for (const auto& [q, axis] : observable.factors) {
        const Gate g{axis == PauliAxis::X   ? GateKind::X
                     : axis == PauliAxis::Y ? GateKind::Y
                                            : GateKind::Z,
                     {q},
                     {}};
        const auto mat = gate_matrix(g);
        // Pure: builds P|psi>. Mixed: applies P to the row side so that the
        // trace below yields Tr[P rho].
        detail::apply_matrix(work, kernel_qubits, mat.data(), g.wires, false);
    }
    if (!state.is_mixed()) {
        cdouble inner = 0.0;
        for (std::size_t i = 0; i < state.data().size(); ++i) {
            inner += std::conj(state.data()[i]) * work[i];
        }
        return observable.weight * inner.real();
    }
    const std::size_t d = state.dim();
    cdouble tr = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        tr += work[r * d + r];
    }
    return observable.weight * tr.real();
}

/// Squared overlap |<a|b>|^2 of two pure states.
inline double fidelity(const QuantumState& a, const QuantumState& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("fidelity: qubit count mismatch");
    }
    if (a.is_mixed() || b.is_mixed()) {
        throw std::invalid_argument("fidelity requires pure states");
    }
    cdouble inner = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        inner += std::conj(a.data()[i]) * b.data()[i];
    }
    return std::norm(inner);
}

/**
 * @brief Tr[rho_k^2] of the single-qubit reduced state; in [1/2, 1].
 */
inline double subsystem_purity(const QuantumState& state, std::size_t qubit) {
    if (qubit >= state.n_qubits()) {
        throw std::out_of_range("subsystem_purity: qubit out of range");
    }
    const std::size_t n = state.n_qubits();
    const std::size_t mask = std::size_t{1} << (n - 1 - qubit);
    const std::size_t dim = std::size_t{1} << n;
    double m00 = 0.0;
    double m11 = 0.0;
    cdouble m01 = 0.0;
    if (!state.is_mixed()) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & mask) {
                continue;
            }
            const cdouble a0 = state.data()[i];
            const cdouble a1 = state.data()[i | mask];
            m00 += std::norm(a0);
            m11 += std::norm(a1);
            m01 += a0 * std::conj(a1);
        }
    } else {
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & mask) {
                continue;
            }
            m00 += state.data()[i * dim + i].real();
            m11 += state.data()[(i | mask) * dim + (i | mask)].real();
            m01 += state.data()[i * dim + (i | mask)];
        }
    }
    return m00 * m00 + m11 * m11 + 2.0 * std::norm(m01);
}

/**
 * @brief Marginal computational-basis probabilities over `wires`.
 *
 * The outcome index orders wires[0] as its most significant bit; callers pick
 * the endianness through the wire list.
 */
inline std::vector<double>
measurement_probabilities(const QuantumState& state,
                          std::span<const std::size_t> wires) {
    const std::size_t n = state.n_qubits();
    const std::size_t k = wires.size();
    if (k == 0) {
        throw std::invalid_argument("measurement needs >= 1 wire");
    }
    for (std::size_t t = 0; t < k; ++t) {
        if (wires[t] >= n) {
            throw std::out_of_range("measurement wire out of range");
        }
        for (std::size_t u = t + 1; u < k; ++u) {
            if (wires[t] == wires[u]) {
                throw std::invalid_argument("duplicate measurement wire");
            }
        }
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> probs(std::size_t{1} << k, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t out = 0;
        for (std::size_t t = 0; t < k; ++t) {
            if (i & (std::size_t{1} << (n - 1 - wires[t]))) {
                out |= std::size_t{1} << (k - 1 - t);
            }
        }
        probs[out] += state.is_mixed() ? state.data()[i * dim + i].real()
                                       : std::norm(state.data()[i]);
    }
    return probs;
}

} // namespace qfm
