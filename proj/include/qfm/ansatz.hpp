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
 * Circuit templates for the trainable blocks of a data-reuploading model.
 *
 * The Circuit_k templates follow the layer layouts of the Sim-et-al. circuit
 * family; Hardware_Efficient uses the circular CNOT pattern with the closing
 * CNOT, Strongly_Entangling uses two Rot+CNOT-ring sub-blocks with ranges 1
 * and 2. Controlled rotations (CRX/CRZ) are decomposed into {rotation, CNOT}
 * sequences sharing a single parameter slot, so every emitted gate is either
 * a Pauli rotation or a Clifford gate. Exact gate orderings are frozen by the
 * golden-layout tests; refactors must not silently change them.
 */

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qfm/circuit.hpp"

namespace qfm {

enum class AnsatzName {
    idle,
    circuit_1,
    circuit_2,
    circuit_3,
    circuit_6,
    circuit_9,
    circuit_15,
    circuit_19,
    no_entangling,
    strongly_entangling,
    hardware_efficient,
};

inline std::string_view to_string(AnsatzName name) {
    switch (name) {
    case AnsatzName::idle:
        return "Idle";
    case AnsatzName::circuit_1:
        return "Circuit_1";
    case AnsatzName::circuit_2:
        return "Circuit_2";
    case AnsatzName::circuit_3:
        return "Circuit_3";
    case AnsatzName::circuit_6:
        return "Circuit_6";
    case AnsatzName::circuit_9:
        return "Circuit_9";
    case AnsatzName::circuit_15:
        return "Circuit_15";
    case AnsatzName::circuit_19:
        return "Circuit_19";
    case AnsatzName::no_entangling:
        return "No_Entangling";
    case AnsatzName::strongly_entangling:
        return "Strongly_Entangling";
    case AnsatzName::hardware_efficient:
        return "Hardware_Efficient";
    }
    return "?";
}

/// Case-insensitive template lookup by CLI-visible name.
inline AnsatzName parse_ansatz_name(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (AnsatzName name :
         {AnsatzName::idle, AnsatzName::circuit_1, AnsatzName::circuit_2,
          AnsatzName::circuit_3, AnsatzName::circuit_6, AnsatzName::circuit_9,
          AnsatzName::circuit_15, AnsatzName::circuit_19,
          AnsatzName::no_entangling, AnsatzName::strongly_entangling,
          AnsatzName::hardware_efficient}) {
        std::string candidate(to_string(name));
        std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (candidate == lower) {
            return name;
        }
    }
    throw std::invalid_argument("unknown ansatz name: " + std::string(text));
}

struct AnsatzSpec {
    AnsatzName name;
    std::size_t n_qubits = 0;
    std::size_t n_layers = 1;
};

/// Smallest register the template supports (2 for entangling layouts).
inline std::size_t ansatz_min_qubits(AnsatzName name) {
    switch (name) {
    case AnsatzName::idle:
    case AnsatzName::circuit_1:
    case AnsatzName::no_entangling:
        return 1;
    default:
        return 2;
    }
}

/// Trainable parameters emitted by one block of the template.
inline std::size_t params_per_block(AnsatzName name, std::size_t n_qubits) {
    const std::size_t n = n_qubits;
    switch (name) {
    case AnsatzName::idle:
        return 0;
    case AnsatzName::circuit_1:
    case AnsatzName::circuit_2:
        return 2 * n;
    case AnsatzName::circuit_3:
        return 3 * n - 1;
    case AnsatzName::circuit_6:
        return n * (n + 3);
    case AnsatzName::circuit_9:
        return n;
    case AnsatzName::circuit_15:
        return 2 * n;
    case AnsatzName::circuit_19:
    case AnsatzName::no_entangling:
    case AnsatzName::hardware_efficient:
        return 3 * n;
    case AnsatzName::strongly_entangling:
        return 6 * n;
    }
    throw std::invalid_argument("unknown ansatz");
}

inline void validate_spec(const AnsatzSpec& spec) {
    if (spec.n_qubits < 1) {
        throw std::invalid_argument("ansatz needs >= 1 qubit");
    }
    if (spec.n_qubits < ansatz_min_qubits(spec.name)) {
        throw std::invalid_argument(
            std::string(to_string(spec.name)) + " requires >= " +
            std::to_string(ansatz_min_qubits(spec.name)) + " qubits");
    }
    if (spec.n_layers < 1) {
        throw std::invalid_argument("ansatz needs >= 1 layer");
    }
}

/**
 * @brief Total trainable parameters of the full model: L encoding blocks are
 * interleaved with L+1 trainable blocks, including the closing one.
 */
inline std::size_t parameter_count(const AnsatzSpec& spec) {
    validate_spec(spec);
    return (spec.n_layers + 1) * params_per_block(spec.name, spec.n_qubits);
}

namespace detail {

/// Appends gates to a fragment while handing out slot indices in order.
class BlockEmitter {
  public:
    BlockEmitter(CircuitIR& ir, std::size_t slot_base)
        : ir_{ir}, next_slot_{slot_base} {}

    void rotation(GateKind kind, std::size_t wire) {
        const std::size_t s = next_slot_++;
        ir_.append(TaggedGate::trainable(Gate{kind, {wire}, {0.0}}, {s}));
    }

    void rot3(std::size_t wire) {
        const std::size_t s = next_slot_;
        next_slot_ += 3;
        ir_.append(TaggedGate::trainable(
            Gate{GateKind::Rot, {wire}, {0.0, 0.0, 0.0}}, {s, s + 1, s + 2}));
    }

    void cnot(std::size_t control, std::size_t target) {
        ir_.append(TaggedGate::fixed(Gate::cnot(control, target)));
    }

    void cz(std::size_t a, std::size_t b) {
        ir_.append(TaggedGate::fixed(Gate::cz(a, b)));
    }

    void h(std::size_t wire) { ir_.append(TaggedGate::fixed(Gate::h(wire))); }

    /// CRZ(theta) = RZ(+theta/2) t, CNOT, RZ(-theta/2) t, CNOT; one slot.
    void crz(std::size_t control, std::size_t target) {
        const std::size_t s = next_slot_++;
        ir_.append(TaggedGate::trainable(Gate{GateKind::RZ, {target}, {0.0}},
                                         {s}, {0.5}));
        cnot(control, target);
        ir_.append(TaggedGate::trainable(Gate{GateKind::RZ, {target}, {0.0}},
                                         {s}, {-0.5}));
        cnot(control, target);
    }

    /// CRX via the Hadamard sandwich around CRZ; one slot.
    void crx(std::size_t control, std::size_t target) {
        h(target);
        crz(control, target);
        h(target);
    }

    std::size_t next_slot() const { return next_slot_; }

  private:
    CircuitIR& ir_;
    std::size_t next_slot_;
};

} // namespace detail

/**
 * @brief One trainable block W of the template, with parameter slots starting
 * at layer_index * params_per_block.
 *
 * The fragment's param_count covers all slots up to and including this block,
 * so a fragment is a valid standalone CircuitIR.
 */
inline CircuitIR build_ansatz(const AnsatzSpec& spec, std::size_t layer_index) {
    validate_spec(spec);
    const std::size_t n = spec.n_qubits;
    const std::size_t per_block = params_per_block(spec.name, n);

    CircuitIR ir;
    ir.n_qubits = n;
    ir.param_count = (layer_index + 1) * per_block;
    detail::BlockEmitter emit(ir, layer_index * per_block);

    switch (spec.name) {
    case AnsatzName::idle:
        break;

    case AnsatzName::circuit_1:
        for (std::size_t q = 0; q < n; ++q) {
            emit.rotation(GateKind::RX, q);
            emit.rotation(GateKind::RZ, q);
        }
        break;

    case AnsatzName::circuit_2:
        for (std::size_t q = 0; q < n; ++q) {
            emit.rotation(GateKind::RX, q);
            emit.rotation(GateKind::RZ, q);
        }
        // CNOT chain from the bottom of the register upwards.
        for (std::size_t i = 0; i + 1 < n; ++i) {
            emit.cnot(n - 1 - i, n - 2 - i);
        }
        break;

    case AnsatzName::circuit_3:
        for (std::size_t q = 0; q < n; ++q) {
            emit.rotation(GateKind::RX, q);
            emit.rotation(GateKind::RZ, q);
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            emit.crz(n - 1 - i, n - 2 - i);
        }
        break;

    case AnsatzName::circuit_6:
        for (std::size_t q = 0; q < n; ++q) {
            emit.rotation(GateKind::RX, q);
            emit.rotation(GateKind::RZ, q);
        }
        // All-to-all CRX block, controls walking up from the bottom wire.
        for (std::size_t ci = 0; ci < n; ++ci) {
            const std::size_t control = n - 1 - ci;
            for (std::size_t ti = 0; ti < n; ++ti) {
                const std::size_t target = n - 1 - ti;
                if (target != control) {
                    emit.crx(control, target);
                }
            }
        }
        for (std::size_t q = 0; q < n; ++q) {
            emit.rotation(GateKind::RX, q);
            emit.rotation(GateKind::RZ, q);
        }
        break;

    case AnsatzName::circuit_9:
        for (std::size_t q = 0; q < n; ++q) {
            emit.h(q);
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            emit.cz(n - 2 - i, n - 1 - i);
        }
        for (std::size_t q = 0; q < n; ++q) {
            emit.rotation(GateKind::RX, q);
        }
        break;

    case AnsatzName::circuit_15:
        for (std::size_t q = 0; q < n; ++q) {
            emit.rotation(GateKind::RY, q);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t control = n - 1 - i;
            emit.cnot(control, (control + 1) % n);
        }
        for (std::size_t q = 0; q < n; ++q) {
            emit.rotation(GateKind::RY, q);
        }
        for (std::size_t c = 0; c < n; ++c) {
            emit.cnot(c, (c + n - 1) % n);
        }
        break;

    case AnsatzName::circuit_19:
        for (std::size_t q = 0; q < n; ++q) {
            emit.rotation(GateKind::RX, q);
            emit.rotation(GateKind::RZ, q);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t control = n - 1 - i;
            emit.crx(control, (control + 1) % n);
        }
        break;

    case AnsatzName::no_entangling:
        for (std::size_t q = 0; q < n; ++q) {
            emit.rot3(q);
        }
        break;

    case AnsatzName::strongly_entangling: {
        for (std::size_t q = 0; q < n; ++q) {
            emit.rot3(q);
        }
        for (std::size_t q = 0; q < n; ++q) {
            emit.cnot(q, (q + 1) % n);
        }
        for (std::size_t q = 0; q < n; ++q) {
            emit.rot3(q);
        }
        // Second ring range 2; degenerates to range 1 on two qubits.
        const std::size_t range = n > 2 ? 2 : 1;
        for (std::size_t q = 0; q < n; ++q) {
            emit.cnot(q, (q + range) % n);
        }
        break;
    }

    case AnsatzName::hardware_efficient:
        for (std::size_t q = 0; q < n; ++q) {
            emit.rotation(GateKind::RY, q);
            emit.rotation(GateKind::RZ, q);
            emit.rotation(GateKind::RY, q);
        }
        if (n > 1) {
            for (std::size_t q = 0; 2 * q + 1 < n; ++q) {
                emit.cnot(2 * q, 2 * q + 1);
            }
            for (std::size_t q = 0; 2 * q + 2 < n; ++q) {
                emit.cnot(2 * q + 1, 2 * q + 2);
            }
            if (n > 2) {
                emit.cnot(n - 1, 0);
            }
        }
        break;
    }

    return ir;
}

} // namespace qfm
