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
 * Gate inventory and dense matrices.
 *
 * Rotation convention: R_P(phi) = exp(-i phi P / 2) for P in {X, Y, Z}, and
 * Rot(a, b, c) = RZ(c) * RY(b) * RZ(a), i.e. RZ(a) acts first. Everything
 * downstream (the simulator kernels and the analytical spectrum engine)
 * assumes this convention.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfm {

using cdouble = std::complex<double>;

enum class GateKind { RX, RY, RZ, Rot, H, S, CNOT, CZ, X, Y, Z };

inline constexpr bool is_rotation(GateKind k) {
    return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ ||
           k == GateKind::Rot;
}

inline constexpr std::size_t gate_arity(GateKind k) {
    return (k == GateKind::CNOT || k == GateKind::CZ) ? 2 : 1;
}

inline constexpr std::size_t gate_angle_count(GateKind k) {
    switch (k) {
    case GateKind::Rot:
        return 3;
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        return 1;
    default:
        return 0;
    }
}

inline std::string_view gate_name(GateKind k) {
    switch (k) {
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::Rot:
        return "Rot";
    case GateKind::H:
        return "H";
    case GateKind::S:
        return "S";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::CZ:
        return "CZ";
    case GateKind::X:
        return "X";
    case GateKind::Y:
        return "Y";
    case GateKind::Z:
        return "Z";
    }
    return "?";
}

/**
 * @brief A single gate instance: kind, target wires and concrete angles.
 *
 * Wires are qubit indices; for two-qubit gates wires[0] is the control.
 */
struct Gate {
    GateKind kind;
    std::vector<std::size_t> wires;
    std::vector<double> angles;

    static Gate rx(double a, std::size_t q) { return {GateKind::RX, {q}, {a}}; }
    static Gate ry(double a, std::size_t q) { return {GateKind::RY, {q}, {a}}; }
    static Gate rz(double a, std::size_t q) { return {GateKind::RZ, {q}, {a}}; }
    static Gate rot(double a, double b, double c, std::size_t q) {
        return {GateKind::Rot, {q}, {a, b, c}};
    }
    static Gate h(std::size_t q) { return {GateKind::H, {q}, {}}; }
    static Gate s(std::size_t q) { return {GateKind::S, {q}, {}}; }
    static Gate x(std::size_t q) { return {GateKind::X, {q}, {}}; }
    static Gate y(std::size_t q) { return {GateKind::Y, {q}, {}}; }
    static Gate z(std::size_t q) { return {GateKind::Z, {q}, {}}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, {control, target}, {}};
    }
    static Gate cz(std::size_t a, std::size_t b) {
        return {GateKind::CZ, {a, b}, {}};
    }
};

inline void validate_gate(const Gate& g) {
    if (g.wires.size() != gate_arity(g.kind)) {
        throw std::invalid_argument("gate " + std::string(gate_name(g.kind)) +
                                    ": wrong wire count");
    }
    if (g.wires.size() == 2 && g.wires[0] == g.wires[1]) {
        throw std::invalid_argument("two-qubit gate wires must be distinct");
    }
    if (g.angles.size() != gate_angle_count(g.kind)) {
        throw std::invalid_argument("gate " + std::string(gate_name(g.kind)) +
                                    ": wrong angle count");
    }
    for (double a : g.angles) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("gate angle is not finite");
        }
    }
}

/**
 * @brief Dense row-major matrix of the gate (2x2 or 4x4).
 *
 * For two-qubit gates the local basis orders wires[0] as the more significant
 * bit, matching the global convention that qubit 0 is the leftmost tensor
 * factor.
 */
inline std::vector<cdouble> gate_matrix(const Gate& g) {
    using namespace std::complex_literals;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
    case GateKind::RX: {
        const double c = std::cos(g.angles[0] / 2);
        const double s = std::sin(g.angles[0] / 2);
        return {c, -1i * s, -1i * s, c};
    }
    case GateKind::RY: {
        const double c = std::cos(g.angles[0] / 2);
        const double s = std::sin(g.angles[0] / 2);
        return {c, -s, s, c};
    }
    case GateKind::RZ: {
        const cdouble e = std::exp(-0.5i * g.angles[0]);
        return {e, 0, 0, std::conj(e)};
    }
    case GateKind::Rot: {
        // RZ(c) * RY(b) * RZ(a); RZ(a) first in circuit order.
        const auto za = gate_matrix(Gate::rz(g.angles[0], g.wires[0]));
        const auto yb = gate_matrix(Gate::ry(g.angles[1], g.wires[0]));
        const auto zc = gate_matrix(Gate::rz(g.angles[2], g.wires[0]));
        std::vector<cdouble> t(4), r(4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                t[2 * i + j] = yb[2 * i] * za[j] + yb[2 * i + 1] * za[2 + j];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r[2 * i + j] = zc[2 * i] * t[j] + zc[2 * i + 1] * t[2 + j];
        return r;
    }
    case GateKind::H:
        return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    case GateKind::S:
        return {1, 0, 0, 1i};
    case GateKind::X:
        return {0, 1, 1, 0};
    case GateKind::Y:
        return {0, -1i, 1i, 0};
    case GateKind::Z:
        return {1, 0, 0, -1};
    case GateKind::CNOT:
        return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    case GateKind::CZ:
        return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
    }
    throw std::invalid_argument("unknown gate kind");
}

} // namespace qfm
