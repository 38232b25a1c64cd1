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
 * Composable noise model.
 *
 * A noiseless circuit compiles into a channel-interleaved program:
 *   - bit-flip(p_sp) on every qubit at the start,
 *   - after every gate, on that gate's wires: BF(p_bf), PF(p_pf), DP(p_dp),
 *     then thermal relaxation when enabled,
 *   - at the end, on every qubit: AD(p_ad), PD(p_pd), BF(p_me),
 *   - every rotation angle perturbed by a fresh coherent error
 *     eps ~ N(0, gate_error_mu^2).
 * Channel order is fixed; the channels do not commute.
 *
 * Thermal relaxation is the zero-temperature model (relaxation toward |0>),
 * valid for t2 <= 2*t1, with all gates assigned the same duration t_factor.
 * For t2 <= t1 it is the identity/Z/reset mixture; for t1 < t2 <= 2*t1 the
 * Kraus set comes from the closed-form Choi eigendecomposition.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qfm/circuit.hpp"
#include "qfm/kraus.hpp"
#include "qfm/rng.hpp"
#include "qfm/state.hpp"

namespace qfm {

/**
 * @brief The nine noise knobs. Everything defaults to off.
 */
struct NoiseParams {
    double p_bf = 0.0; ///< per-gate bit flip
    double p_pf = 0.0; ///< per-gate phase flip
    double p_dp = 0.0; ///< per-gate depolarising
    double p_ad = 0.0; ///< amplitude damping at circuit end
    double p_pd = 0.0; ///< phase damping at circuit end
    double p_me = 0.0; ///< measurement bit flip at circuit end
    double p_sp = 0.0; ///< state-preparation bit flip at circuit start
    double t1 = 0.0;
    double t2 = 0.0;
    double t_factor = 0.0;       ///< gate duration used for thermal relaxation
    double gate_error_mu = 0.0;  ///< stddev of the coherent angle error

    bool thermal_enabled() const {
        return t1 != 0.0 || t2 != 0.0 || t_factor != 0.0;
    }

    bool has_incoherent() const {
        return p_bf > 0.0 || p_pf > 0.0 || p_dp > 0.0 || p_ad > 0.0 ||
               p_pd > 0.0 || p_me > 0.0 || p_sp > 0.0 || thermal_enabled();
    }

    bool is_noiseless() const {
        return !has_incoherent() && gate_error_mu == 0.0;
    }

    void validate() const {
        for (double p : {p_bf, p_pf, p_dp, p_ad, p_pd, p_me, p_sp}) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw std::invalid_argument(
                    "noise probabilities must lie in [0, 1]");
            }
        }
        if (!(gate_error_mu >= 0.0) || !std::isfinite(gate_error_mu)) {
            throw std::invalid_argument("gate_error_mu must be >= 0");
        }
        if (thermal_enabled()) {
            if (!(t1 > 0.0) || !(t2 > 0.0) || !(t_factor > 0.0)) {
                throw std::invalid_argument(
                    "thermal relaxation needs t1, t2, t_factor > 0");
            }
            if (t2 > 2.0 * t1) {
                throw std::invalid_argument(
                    "thermal relaxation requires t2 <= 2*t1");
            }
        }
    }
};

enum class NoiseKind {
    bit_flip,
    phase_flip,
    depolarizing,
    amplitude_damping,
    phase_damping,
    thermal_relaxation,
};

namespace detail {

inline std::vector<std::vector<cdouble>> thermal_kraus_ops(double t1,
                                                           double t2,
                                                           double t_gate) {
    const double gamma1 = std::exp(-t_gate / t1);
    const double gamma2 = std::exp(-t_gate / t2);
    const double p_reset = 1.0 - gamma1;
    std::vector<std::vector<cdouble>> ops;
    if (t2 <= t1) {
        // Mixture of identity, Z and reset-to-|0>.
        const double p_id = (gamma1 + gamma2) / 2.0;
        const double p_z = (gamma1 - gamma2) / 2.0;
        if (p_id > 0.0) {
            const double a = std::sqrt(p_id);
            ops.push_back({a, 0, 0, a});
        }
        if (p_z > 0.0) {
            const double a = std::sqrt(p_z);
            ops.push_back({a, 0, 0, -a});
        }
        if (p_reset > 0.0) {
            const double a = std::sqrt(p_reset);
            ops.push_back({a, 0, 0, 0});
            ops.push_back({0, a, 0, 0});
        }
        return ops;
    }
    // t1 < t2 <= 2*t1: eigendecomposition of the 2x2 Choi block
    // [[1, gamma2], [gamma2, gamma1]] over {|00>, |11>}, plus the reset
    // operator sqrt(1 - gamma1) |0><1|.
    const double half_trace = (1.0 + gamma1) / 2.0;
    const double half_gap = (1.0 - gamma1) / 2.0;
    const double disc = std::sqrt(half_gap * half_gap + gamma2 * gamma2);
    const double lambda_plus = half_trace + disc;
    const double lambda_minus = half_trace - disc;
    // Eigenvector (cos t, sin t) for lambda_plus, (-sin t, cos t) for minus.
    const double theta = 0.5 * std::atan2(2.0 * gamma2, 1.0 - gamma1);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    if (lambda_plus > 0.0) {
        const double a = std::sqrt(lambda_plus);
        ops.push_back({a * c, 0, 0, a * s});
    }
    if (lambda_minus > 0.0) {
        const double a = std::sqrt(lambda_minus);
        ops.push_back({-a * s, 0, 0, a * c});
    }
    if (p_reset > 0.0) {
        const double a = std::sqrt(p_reset);
        ops.push_back({0, a, 0, 0});
    }
    return ops;
}

} // namespace detail

/**
 * @brief Standard single-qubit Kraus set for the given noise kind.
 *
 * Zero-probability mixture members are dropped, so e.g. bit_flip at p=0
 * reduces to a single identity operator.
 */
inline KrausChannel kraus_for(NoiseKind kind, const NoiseParams& np,
                              std::size_t wire) {
    std::vector<std::vector<cdouble>> ops;
    const auto probability_pair = [&](double p, cdouble m00, cdouble m01,
                                      cdouble m10, cdouble m11) {
        if (p < 1.0) {
            const double a = std::sqrt(1.0 - p);
            ops.push_back({a, 0, 0, a});
        }
        if (p > 0.0) {
            const double b = std::sqrt(p);
            ops.push_back({b * m00, b * m01, b * m10, b * m11});
        }
    };
    switch (kind) {
    case NoiseKind::bit_flip:
        probability_pair(np.p_bf, 0, 1, 1, 0);
        break;
    case NoiseKind::phase_flip:
        probability_pair(np.p_pf, 1, 0, 0, -1);
        break;
    case NoiseKind::depolarizing: {
        const double p = np.p_dp;
        if (p < 1.0) {
            const double a = std::sqrt(1.0 - p);
            ops.push_back({a, 0, 0, a});
        }
        if (p > 0.0) {
            const double b = std::sqrt(p / 3.0);
            ops.push_back({0, b, b, 0});
            ops.push_back({0, cdouble{0, -b}, cdouble{0, b}, 0});
            ops.push_back({b, 0, 0, -b});
        }
        break;
    }
    case NoiseKind::amplitude_damping: {
        const double g = np.p_ad;
        ops.push_back({1, 0, 0, std::sqrt(1.0 - g)});
        if (g > 0.0) {
            ops.push_back({0, std::sqrt(g), 0, 0});
        }
        break;
    }
    case NoiseKind::phase_damping: {
        const double g = np.p_pd;
        ops.push_back({1, 0, 0, std::sqrt(1.0 - g)});
        if (g > 0.0) {
            ops.push_back({0, 0, 0, std::sqrt(g)});
        }
        break;
    }
    case NoiseKind::thermal_relaxation:
        if (!(np.t1 > 0.0) || !(np.t2 > 0.0) || !(np.t_factor > 0.0)) {
            throw std::invalid_argument(
                "thermal relaxation needs t1, t2, t_factor > 0");
        }
        if (np.t2 > 2.0 * np.t1) {
            throw std::invalid_argument(
                "thermal relaxation requires t2 <= 2*t1");
        }
        ops = detail::thermal_kraus_ops(np.t1, np.t2, np.t_factor);
        break;
    }
    return KrausChannel(std::move(ops), {wire});
}

/// Whether coherent gate errors also hit encoding rotations.
enum class CoherentErrorScope { all_rotations, trainable_only };

/**
 * @brief Channel-interleaved program produced by compile_noisy.
 */
struct NoisyProgram {
    std::size_t n_qubits = 0;
    std::vector<std::variant<Gate, KrausChannel>> ops;
    bool has_channels = false;
};

/**
 * @brief Interleave the bound circuit with noise channels.
 *
 * The coherent angle error is the only stochastic element; it is drawn from
 * `rng` per rotation angle per compilation. By default it applies to
 * trainable and encoding rotations alike; pass
 * CoherentErrorScope::trainable_only to exempt encodings.
 */
inline NoisyProgram compile_noisy(
    const CircuitIR& bound, const NoiseParams& noise, RngStream& rng,
    CoherentErrorScope scope = CoherentErrorScope::all_rotations) {
    noise.validate();
    NoisyProgram prog;
    prog.n_qubits = bound.n_qubits;

    const auto push_channel = [&](NoiseKind kind, std::size_t wire) {
        prog.ops.emplace_back(kraus_for(kind, noise, wire));
        prog.has_channels = true;
    };

    if (noise.p_sp > 0.0) {
        for (std::size_t q = 0; q < bound.n_qubits; ++q) {
            NoiseParams sp;
            sp.p_bf = noise.p_sp;
            prog.ops.emplace_back(kraus_for(NoiseKind::bit_flip, sp, q));
            prog.has_channels = true;
        }
    }

    for (const auto& tg : bound.gates) {
        Gate g = tg.gate;
        if (noise.gate_error_mu > 0.0 && is_rotation(g.kind) &&
            (tg.tag != GateTag::encoding ||
             scope == CoherentErrorScope::all_rotations)) {
            for (double& angle : g.angles) {
                angle += rng.gaussian(noise.gate_error_mu);
            }
        }
        prog.ops.emplace_back(std::move(g));
        for (NoiseKind kind : {NoiseKind::bit_flip, NoiseKind::phase_flip,
                               NoiseKind::depolarizing}) {
            const double p = kind == NoiseKind::bit_flip     ? noise.p_bf
                             : kind == NoiseKind::phase_flip ? noise.p_pf
                                                             : noise.p_dp;
            if (p > 0.0) {
                for (std::size_t w : tg.gate.wires) {
                    push_channel(kind, w);
                }
            }
        }
        if (noise.thermal_enabled()) {
            for (std::size_t w : tg.gate.wires) {
                push_channel(NoiseKind::thermal_relaxation, w);
            }
        }
    }

    if (noise.p_ad > 0.0) {
        for (std::size_t q = 0; q < bound.n_qubits; ++q) {
            push_channel(NoiseKind::amplitude_damping, q);
        }
    }
    if (noise.p_pd > 0.0) {
        for (std::size_t q = 0; q < bound.n_qubits; ++q) {
            push_channel(NoiseKind::phase_damping, q);
        }
    }
    if (noise.p_me > 0.0) {
        for (std::size_t q = 0; q < bound.n_qubits; ++q) {
            NoiseParams me;
            me.p_bf = noise.p_me;
            prog.ops.emplace_back(kraus_for(NoiseKind::bit_flip, me, q));
            prog.has_channels = true;
        }
    }
    return prog;
}

/**
 * @brief Run a program on |0...0>; stays on the pure path when the program
 * contains no channels.
 */
inline QuantumState run_program(const NoisyProgram& prog) {
    QuantumState state = QuantumState::zero_pure(prog.n_qubits);
    if (prog.has_channels) {
        state.promote_to_mixed();
    }
    for (const auto& op : prog.ops) {
        if (std::holds_alternative<Gate>(op)) {
            apply_gate(state, std::get<Gate>(op));
        } else {
            apply_kraus(state, std::get<KrausChannel>(op));
        }
    }
    return state;
}

} // namespace qfm
