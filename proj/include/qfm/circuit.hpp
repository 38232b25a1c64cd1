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
 * Circuit intermediate representation: an ordered gate list where each gate
 * is tagged trainable, encoding or fixed.
 *
 * Trainable gates reference parameter slots through per-angle (slot, scale)
 * pairs, so decompositions like CRZ -> {RZ(+theta/2), CNOT, RZ(-theta/2),
 * CNOT} can share one slot. Encoding gates take the scalar input x as their
 * angle and never consume a trainable slot.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfm/gates.hpp"
#include "qfm/state.hpp"

namespace qfm {

enum class GateTag { trainable, encoding, fixed };

inline std::string_view tag_name(GateTag t) {
    switch (t) {
    case GateTag::trainable:
        return "trainable";
    case GateTag::encoding:
        return "encoding";
    case GateTag::fixed:
        return "fixed";
    }
    return "?";
}

struct TaggedGate {
    Gate gate;
    GateTag tag = GateTag::fixed;
    /// Per-angle trainable slot indices (trainable gates only).
    std::vector<std::size_t> slots;
    /// Per-angle multiplier applied to the bound parameter value.
    std::vector<double> scales;

    static TaggedGate fixed(Gate g) { return {std::move(g), GateTag::fixed, {}, {}}; }

    static TaggedGate trainable(Gate g, std::vector<std::size_t> slots,
                                std::vector<double> scales = {}) {
        if (scales.empty()) {
            scales.assign(slots.size(), 1.0);
        }
        return {std::move(g), GateTag::trainable, std::move(slots),
                std::move(scales)};
    }

    static TaggedGate encoding(GateKind kind, std::size_t wire) {
        return {Gate{kind, {wire}, {0.0}}, GateTag::encoding, {}, {}};
    }
};

struct CircuitIR {
    std::size_t n_qubits = 0;
    std::vector<TaggedGate> gates;
    std::size_t param_count = 0;
    std::size_t encoding_gate_count = 0;

    void append(TaggedGate tg) {
        validate_tagged(tg);
        if (tg.tag == GateTag::encoding) {
            ++encoding_gate_count;
        }
        gates.push_back(std::move(tg));
    }

    /// Concatenate another fragment (same qubit count, shared slot space).
    void append_all(const CircuitIR& other) {
        if (other.n_qubits != n_qubits) {
            throw std::invalid_argument("fragment qubit count mismatch");
        }
        for (const auto& tg : other.gates) {
            append(tg);
        }
    }

    /// Human-readable gate list; used by the golden-layout tests.
    std::string describe() const {
        std::ostringstream os;
        for (const auto& tg : gates) {
            os << gate_name(tg.gate.kind);
            for (std::size_t w : tg.gate.wires) {
                os << " q" << w;
            }
            os << " [" << tag_name(tg.tag);
            if (tg.tag == GateTag::trainable) {
                for (std::size_t i = 0; i < tg.slots.size(); ++i) {
                    os << (i == 0 ? " s" : ",s") << tg.slots[i];
                    if (tg.scales[i] != 1.0) {
                        os << "*" << tg.scales[i];
                    }
                }
            }
            os << "]\n";
        }
        return os.str();
    }

  private:
    void validate_tagged(const TaggedGate& tg) const {
        if (tg.gate.wires.size() != gate_arity(tg.gate.kind)) {
            throw std::invalid_argument("tagged gate: wrong wire count");
        }
        for (std::size_t w : tg.gate.wires) {
            if (w >= n_qubits) {
                throw std::out_of_range("tagged gate wire out of range");
            }
        }
        const std::size_t n_angles = gate_angle_count(tg.gate.kind);
        switch (tg.tag) {
        case GateTag::trainable:
            if (tg.slots.size() != n_angles || tg.scales.size() != n_angles ||
                n_angles == 0) {
                throw std::invalid_argument(
                    "trainable gate needs one slot per angle");
            }
            for (std::size_t s : tg.slots) {
                if (s >= param_count) {
                    throw std::out_of_range("trainable slot out of range");
                }
            }
            break;
        case GateTag::encoding:
            if (n_angles != 1) {
                throw std::invalid_argument(
                    "encoding gate must be a single-angle rotation");
            }
            if (!tg.slots.empty()) {
                throw std::invalid_argument(
                    "encoding gate carries no trainable slot");
            }
            break;
        case GateTag::fixed:
            if (tg.gate.angles.size() != n_angles) {
                throw std::invalid_argument("fixed gate: wrong angle count");
            }
            break;
        }
    }
};

/**
 * @brief Resolve all angles: trainable from `params` (slot, scale), encoding
 * from `x`. Tags and slots are preserved so noise compilation can still tell
 * gate roles apart.
 */
inline CircuitIR bind_parameters(const CircuitIR& ir, std::span<const double> params,
                      double x) {
    if (params.size() != ir.param_count) {
        throw std::invalid_argument("parameter vector length mismatch: got " +
                                    std::to_string(params.size()) +
                                    ", expected " +
                                    std::to_string(ir.param_count));
    }
    for (double p : params) {
        if (!std::isfinite(p)) {
            throw std::invalid_argument("parameter is not finite");
        }
    }
    if (!std::isfinite(x)) {
        throw std::invalid_argument("input x is not finite");
    }
    CircuitIR bound = ir;
    for (auto& tg : bound.gates) {
        switch (tg.tag) {
        case GateTag::trainable:
            tg.gate.angles.resize(tg.slots.size());
            for (std::size_t i = 0; i < tg.slots.size(); ++i) {
                tg.gate.angles[i] = tg.scales[i] * params[tg.slots[i]];
            }
            break;
        case GateTag::encoding:
            tg.gate.angles = {x};
            break;
        case GateTag::fixed:
            break;
        }
    }
    return bound;
}

/// Run a bound circuit on |0...0> with the pure-state simulator.
inline QuantumState simulate_pure(const CircuitIR& bound) {
    QuantumState state = QuantumState::zero_pure(bound.n_qubits);
    for (const auto& tg : bound.gates) {
        apply_gate(state, tg.gate);
    }
    return state;
}

} // namespace qfm
