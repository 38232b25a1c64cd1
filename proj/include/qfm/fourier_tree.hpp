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
 * Exact analytical Fourier spectrum via backward Pauli conjugation.
 *
 * The observable, written as a weighted Pauli string, is conjugated backward
 * through the circuit. Clifford gates (H, S, CNOT, CZ, X, Y, Z) map Pauli
 * strings to signed Pauli strings; a rotation R_P(phi) maps a term T to T
 * when [P, T] = 0 and otherwise branches into
 *
 *     cos(phi) * T  +  sin(phi) * (i P T),
 *
 * where i P T is again a real-signed Pauli string. Trainable and fixed
 * rotation angles are substituted numerically; encoding rotations keep
 * phi = x symbolic, so every surviving term carries a trigonometric monomial
 * cos^a(x) sin^b(x). Terms with identical (Pauli string, a, b) keys merge,
 * which keeps the branch set bounded by 4^n times the number of monomials
 * instead of growing exponentially with circuit depth.
 *
 * A leaf evaluates to its weight when its Pauli string is diagonal (identity
 * or Z factors only, <0|P|0> = 1) and to zero otherwise. The monomials of the
 * surviving leaves are expanded into exponentials e^{i omega x} with exact
 * integer binomial convolutions scaled by the dyadic factor (-i)^b / 2^(a+b),
 * so coefficient collection introduces no floating cancellation beyond the
 * theta-dependent weights themselves. Frequencies the circuit cannot reach
 * keep an exact 0 coefficient.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qfm/circuit.hpp"
#include "qfm/pauli.hpp"
#include "qfm/spectrum.hpp"

namespace qfm {

namespace detail {

/// Conjugation child i*P*T for anticommuting generator p and term axis s;
/// returns {new axis, sign}.
inline constexpr std::pair<unsigned, int> i_p_t(unsigned p, unsigned s) {
    // p, s in {1=X, 2=Y, 3=Z}, p != s.
    if (p == 1) {
        return s == 2 ? std::pair<unsigned, int>{3, -1}
                      : std::pair<unsigned, int>{2, +1};
    }
    if (p == 2) {
        return s == 1 ? std::pair<unsigned, int>{3, +1}
                      : std::pair<unsigned, int>{1, -1};
    }
    return s == 1 ? std::pair<unsigned, int>{2, -1}
                  : std::pair<unsigned, int>{1, +1};
}

} // namespace detail

/**
 * @brief The merged backward-conjugation expansion of a model's observable.
 *
 * Immutable after construction; spectrum() only reads the leaf set.
 */
class FourierTree {
  public:
    /// Branches whose accumulated weight falls below this magnitude are
    /// dropped; well below every spectrum tolerance used in tests.
    static constexpr double kPruneThreshold = 1e-12;

    struct Leaf {
        std::uint32_t x_mask = 0; ///< per-qubit X component (bit q = qubit q)
        std::uint32_t z_mask = 0; ///< per-qubit Z component
        std::uint16_t cos_power = 0;
        std::uint16_t sin_power = 0;
        double weight = 0.0;

        bool diagonal() const { return x_mask == 0; }
    };

    FourierTree(const CircuitIR& ir, std::span<const double> params,
                const PauliString& observable = PauliString::z(0))
        : n_qubits_{ir.n_qubits}, max_freq_{qfm::max_frequency(ir)} {
        if (ir.n_qubits > 16) {
            // Pauli masks are packed into 16 bits per component.
            throw std::invalid_argument("fourier tree supports <= 16 qubits");
        }
        if (params.size() != ir.param_count) {
            throw std::invalid_argument("parameter vector length mismatch");
        }
        if (!observable.factors.empty() &&
            observable.max_wire() >= ir.n_qubits) {
            throw std::out_of_range("observable wire out of range");
        }

        std::unordered_map<std::uint64_t, double> terms;
        terms.reserve(64);
        terms[pack(initial_leaf(observable))] = observable.weight;

        for (auto it = ir.gates.rbegin(); it != ir.gates.rend(); ++it) {
            const TaggedGate& tg = *it;
            switch (tg.gate.kind) {
            case GateKind::Rot: {
                // Rot(a,b,c) = RZ(c) RY(b) RZ(a); backward order RZ(c) first.
                double a0, a1, a2;
                resolve_rot_angles(tg, params, a0, a1, a2);
                terms = rotate(std::move(terms), 3, tg.gate.wires[0], a2,
                               false);
                terms = rotate(std::move(terms), 2, tg.gate.wires[0], a1,
                               false);
                terms = rotate(std::move(terms), 3, tg.gate.wires[0], a0,
                               false);
                break;
            }
            case GateKind::RX:
            case GateKind::RY:
            case GateKind::RZ: {
                const unsigned axis = tg.gate.kind == GateKind::RX   ? 1u
                                      : tg.gate.kind == GateKind::RY ? 2u
                                                                     : 3u;
                if (tg.tag == GateTag::encoding) {
                    terms = rotate(std::move(terms), axis, tg.gate.wires[0],
                                   0.0, true);
                } else {
                    terms = rotate(std::move(terms), axis, tg.gate.wires[0],
                                   resolve_angle(tg, params), false);
                }
                break;
            }
            case GateKind::H:
            case GateKind::S:
            case GateKind::X:
            case GateKind::Y:
            case GateKind::Z:
                terms = clifford1(std::move(terms), tg.gate.kind,
                                  tg.gate.wires[0]);
                break;
            case GateKind::CNOT:
            case GateKind::CZ:
                terms = clifford2(std::move(terms), tg.gate.kind,
                                  tg.gate.wires[0], tg.gate.wires[1]);
                break;
            }
        }

        leaves_.reserve(terms.size());
        for (const auto& [key, weight] : terms) {
            Leaf leaf = unpack(key);
            leaf.weight = weight;
            leaves_.push_back(leaf);
        }
    }

    const std::vector<Leaf>& leaves() const { return leaves_; }
    std::size_t max_frequency() const { return max_freq_; }

    /**
     * @brief Collect the exact coefficients c_omega for omega in {-E..E}.
     */
    Spectrum spectrum() const {
        // Group diagonal leaves by trig monomial before expanding.
        std::unordered_map<std::uint32_t, double> monomials;
        for (const Leaf& leaf : leaves_) {
            if (!leaf.diagonal()) {
                continue;
            }
            const std::uint32_t key =
                (static_cast<std::uint32_t>(leaf.cos_power) << 16) |
                leaf.sin_power;
            monomials[key] += leaf.weight;
        }

        const int freq_max = static_cast<int>(max_freq_);
        Spectrum spec;
        spec.method = Spectrum::Method::analytical;
        spec.frequencies.resize(2 * max_freq_ + 1);
        spec.coefficients.assign(2 * max_freq_ + 1, cdouble{0.0, 0.0});
        for (int omega = -freq_max; omega <= freq_max; ++omega) {
            spec.frequencies[static_cast<std::size_t>(omega + freq_max)] =
                omega;
        }

        for (const auto& [key, weight] : monomials) {
            if (weight == 0.0) {
                continue;
            }
            const unsigned a = key >> 16;
            const unsigned b = key & 0xffffu;
            const auto expansion = trig_monomial_expansion(a, b);
            const int degree = static_cast<int>(a + b);
            for (int omega = -degree; omega <= degree; ++omega) {
                const std::int64_t integer_coeff =
                    expansion[static_cast<std::size_t>(omega + degree)];
                if (integer_coeff == 0) {
                    continue;
                }
                const double dyadic =
                    std::ldexp(static_cast<double>(integer_coeff),
                               -static_cast<int>(a + b));
                spec.coefficients[static_cast<std::size_t>(omega + freq_max)] +=
                    weight * dyadic * i_power_minus(b);
            }
        }
        return spec;
    }

  private:
    // Key layout: x_mask | z_mask << 16 | cos_power << 32 | sin_power << 48.
    static std::uint64_t pack(const Leaf& l) {
        return static_cast<std::uint64_t>(l.x_mask) |
               (static_cast<std::uint64_t>(l.z_mask) << 16) |
               (static_cast<std::uint64_t>(l.cos_power) << 32) |
               (static_cast<std::uint64_t>(l.sin_power) << 48);
    }

    static Leaf unpack(std::uint64_t key) {
        Leaf l;
        l.x_mask = static_cast<std::uint32_t>(key & 0xffffu);
        l.z_mask = static_cast<std::uint32_t>((key >> 16) & 0xffffu);
        l.cos_power = static_cast<std::uint16_t>((key >> 32) & 0xffffu);
        l.sin_power = static_cast<std::uint16_t>((key >> 48) & 0xffffu);
        return l;
    }

    static Leaf initial_leaf(const PauliString& observable) {
        Leaf l;
        for (const auto& [q, axis] : observable.factors) {
            const unsigned code = axis == PauliAxis::X   ? 1u
                                  : axis == PauliAxis::Y ? 2u
                                                         : 3u;
            set_axis(l, q, code);
        }
        return l;
    }

    static unsigned get_axis(const Leaf& l, std::size_t q) {
        const bool x = (l.x_mask >> q) & 1u;
        const bool z = (l.z_mask >> q) & 1u;
        return x ? (z ? 2u : 1u) : (z ? 3u : 0u);
    }

    static void set_axis(Leaf& l, std::size_t q, unsigned code) {
        const std::uint32_t bit = 1u << q;
        l.x_mask &= ~bit;
        l.z_mask &= ~bit;
        if (code == 1u || code == 2u) {
            l.x_mask |= bit;
        }
        if (code == 2u || code == 3u) {
            l.z_mask |= bit;
        }
    }

    static double resolve_angle(const TaggedGate& tg,
                                std::span<const double> params) {
        if (tg.tag == GateTag::trainable) {
            return tg.scales[0] * params[tg.slots[0]];
        }
        return tg.gate.angles[0];
    }

    static void resolve_rot_angles(const TaggedGate& tg,
                                   std::span<const double> params, double& a0,
                                   double& a1, double& a2) {
        if (tg.tag == GateTag::trainable) {
            a0 = tg.scales[0] * params[tg.slots[0]];
            a1 = tg.scales[1] * params[tg.slots[1]];
            a2 = tg.scales[2] * params[tg.slots[2]];
        } else {
            a0 = tg.gate.angles[0];
            a1 = tg.gate.angles[1];
            a2 = tg.gate.angles[2];
        }
    }

    static cdouble i_power_minus(unsigned b) {
        switch (b % 4) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, -1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, 1.0};
        }
    }

    /// Integer coefficients of (z + 1/z)^a (z - 1/z)^b over exponents
    /// -(a+b)..(a+b), index-shifted by a+b.
    static std::vector<std::int64_t> trig_monomial_expansion(unsigned a,
                                                             unsigned b) {
        const int degree = static_cast<int>(a + b);
        std::vector<std::int64_t> poly(2 * degree + 1, 0);
        poly[static_cast<std::size_t>(degree)] = 1;
        std::vector<std::int64_t> next(poly.size(), 0);
        const auto convolve = [&](std::int64_t lower_sign) {
            std::fill(next.begin(), next.end(), 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                if (poly[i] == 0) {
                    continue;
                }
                if (i + 1 < poly.size()) {
                    next[i + 1] += poly[i];
                }
                if (i > 0) {
                    next[i - 1] += lower_sign * poly[i];
                }
            }
            std::swap(poly, next);
        };
        for (unsigned k = 0; k < a; ++k) {
            convolve(+1);
        }
        for (unsigned k = 0; k < b; ++k) {
            convolve(-1);
        }
        return poly;
    }

    using TermMap = std::unordered_map<std::uint64_t, double>;

    void deposit(TermMap& into, const Leaf& leaf, double weight) const {
        into[pack(leaf)] += weight;
    }

    static void prune(TermMap& terms) {
        for (auto it = terms.begin(); it != terms.end();) {
            if (std::abs(it->second) < kPruneThreshold) {
                it = terms.erase(it);
            } else {
                ++it;
            }
        }
    }

    TermMap rotate(TermMap terms, unsigned generator, std::size_t wire,
                   double angle, bool symbolic) const {
        TermMap next;
        next.reserve(terms.size() * 2);
        const double cos_value = symbolic ? 0.0 : std::cos(angle);
        const double sin_value = symbolic ? 0.0 : std::sin(angle);
        for (const auto& [key, weight] : terms) {
            Leaf leaf = unpack(key);
            const unsigned axis = get_axis(leaf, wire);
            if (axis == 0u || axis == generator) {
                deposit(next, leaf, weight);
                continue;
            }
            const auto [child_axis, sign] = detail::i_p_t(generator, axis);
            if (symbolic) {
                Leaf cos_leaf = leaf;
                ++cos_leaf.cos_power;
                deposit(next, cos_leaf, weight);
                Leaf sin_leaf = leaf;
                ++sin_leaf.sin_power;
                set_axis(sin_leaf, wire, child_axis);
                deposit(next, sin_leaf, weight * sign);
            } else {
                deposit(next, leaf, weight * cos_value);
                Leaf child = leaf;
                set_axis(child, wire, child_axis);
                deposit(next, child, weight * sin_value * sign);
            }
        }
        prune(next);
        return next;
    }

    TermMap clifford1(TermMap terms, GateKind kind, std::size_t wire) const {
        TermMap next;
        next.reserve(terms.size());
        for (const auto& [key, weight] : terms) {
            Leaf leaf = unpack(key);
            const unsigned axis = get_axis(leaf, wire);
            unsigned new_axis = axis;
            int sign = 1;
            switch (kind) {
            case GateKind::H:
                new_axis = axis == 1u ? 3u : axis == 3u ? 1u : axis;
                sign = axis == 2u ? -1 : 1;
                break;
            case GateKind::S: // S^dag T S
                if (axis == 1u) {
                    new_axis = 2u;
                    sign = -1;
                } else if (axis == 2u) {
                    new_axis = 1u;
                }
                break;
            case GateKind::X:
                sign = (axis == 2u || axis == 3u) ? -1 : 1;
                break;
            case GateKind::Y:
                sign = (axis == 1u || axis == 3u) ? -1 : 1;
                break;
            case GateKind::Z:
                sign = (axis == 1u || axis == 2u) ? -1 : 1;
                break;
            default:
                throw std::invalid_argument("not a single-qubit Clifford");
            }
            Leaf child = leaf;
            set_axis(child, wire, new_axis);
            deposit(next, child, weight * sign);
        }
        return next;
    }

    TermMap clifford2(TermMap terms, GateKind kind, std::size_t control,
                      std::size_t target) const {
        // Conjugation tables on (axis_control, axis_target); both gates are
        // self-inverse so the direction does not matter.
        struct Entry {
            unsigned c;
            unsigned t;
            int sign;
        };
        static constexpr Entry cnot_table[4][4] = {
            {{0, 0, 1}, {0, 1, 1}, {3, 2, 1}, {3, 3, 1}},
            {{1, 1, 1}, {1, 0, 1}, {2, 3, 1}, {2, 2, -1}},
            {{2, 1, 1}, {2, 0, 1}, {1, 3, -1}, {1, 2, 1}},
            {{3, 0, 1}, {3, 1, 1}, {0, 2, 1}, {0, 3, 1}},
        };
        static constexpr Entry cz_table[4][4] = {
            {{0, 0, 1}, {3, 1, 1}, {3, 2, 1}, {0, 3, 1}},
            {{1, 3, 1}, {2, 2, 1}, {2, 1, -1}, {1, 0, 1}},
            {{2, 3, 1}, {1, 2, -1}, {1, 1, 1}, {2, 0, 1}},
            {{3, 0, 1}, {0, 1, 1}, {0, 2, 1}, {3, 3, 1}},
        };
        const auto& table =
            kind == GateKind::CNOT ? cnot_table : cz_table;
        TermMap next;
        next.reserve(terms.size());
        for (const auto& [key, weight] : terms) {
            Leaf leaf = unpack(key);
            const Entry& e =
                table[get_axis(leaf, control)][get_axis(leaf, target)];
            Leaf child = leaf;
            set_axis(child, control, e.c);
            set_axis(child, target, e.t);
            deposit(next, child, weight * e.sign);
        }
        return next;
    }

    std::size_t n_qubits_;
    std::size_t max_freq_;
    std::vector<Leaf> leaves_;
};

/**
 * @brief Exact spectrum of a noiseless model at the given parameters.
 */
inline Spectrum
analytical_spectrum(const CircuitIR& ir, std::span<const double> params,
                    const PauliString& observable = PauliString::z(0)) {
    return FourierTree(ir, params, observable).spectrum();
}

} // namespace qfm
