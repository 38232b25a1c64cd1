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

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <fstream>
#include <sstream>

#include "qfm/ansatz.hpp"
#include "support/test_helpers.hpp"

using namespace qfm;
using Catch::Matchers::WithinAbs;
using namespace std::complex_literals;

#ifndef QFM_GOLDEN_DIR
#define QFM_GOLDEN_DIR "."
#endif

namespace {

std::size_t count_kind(const CircuitIR& ir, GateKind k) {
    std::size_t n = 0;
    for (const auto& tg : ir.gates) {
        n += tg.gate.kind == k ? 1 : 0;
    }
    return n;
}

std::size_t count_two_qubit(const CircuitIR& ir) {
    std::size_t n = 0;
    for (const auto& tg : ir.gates) {
        n += tg.gate.wires.size() == 2 ? 1 : 0;
    }
    return n;
}

std::size_t count_rotations(const CircuitIR& ir) {
    std::size_t n = 0;
    for (const auto& tg : ir.gates) {
        n += is_rotation(tg.gate.kind) ? 1 : 0;
    }
    return n;
}

} // namespace

TEST_CASE("hardware efficient block, 4 qubits") {
    const auto ir = build_ansatz({AnsatzName::hardware_efficient, 4, 1}, 0);
    CHECK(count_rotations(ir) == 12);
    CHECK(count_kind(ir, GateKind::CNOT) == 4);
    CHECK(ir.param_count == 12);
    CHECK(parameter_count({AnsatzName::hardware_efficient, 4, 1}) == 24);
}

TEST_CASE("strongly entangling block, 4 qubits") {
    const auto ir = build_ansatz({AnsatzName::strongly_entangling, 4, 1}, 0);
    CHECK(count_kind(ir, GateKind::Rot) == 8);
    CHECK(count_kind(ir, GateKind::CNOT) == 8);
    CHECK(ir.param_count == 24);
    CHECK(parameter_count({AnsatzName::strongly_entangling, 4, 2}) == 72);
}

TEST_CASE("no entangling block emits only local Rot gates") {
    const auto ir = build_ansatz({AnsatzName::no_entangling, 3, 1}, 0);
    CHECK(count_kind(ir, GateKind::Rot) == 3);
    CHECK(count_two_qubit(ir) == 0);
    CHECK(parameter_count({AnsatzName::no_entangling, 1, 1}) == 6);
}

TEST_CASE("per-block parameter counts") {
    CHECK(params_per_block(AnsatzName::circuit_1, 4) == 8);
    CHECK(params_per_block(AnsatzName::circuit_2, 4) == 8);
    CHECK(params_per_block(AnsatzName::circuit_3, 4) == 11);
    CHECK(params_per_block(AnsatzName::circuit_6, 4) == 28);
    CHECK(params_per_block(AnsatzName::circuit_9, 4) == 4);
    CHECK(params_per_block(AnsatzName::circuit_15, 4) == 8);
    CHECK(params_per_block(AnsatzName::circuit_19, 4) == 12);
    CHECK(params_per_block(AnsatzName::idle, 4) == 0);
}

TEST_CASE("blocks use exactly their slot range") {
    for (AnsatzName name :
         {AnsatzName::circuit_1, AnsatzName::circuit_2, AnsatzName::circuit_3,
          AnsatzName::circuit_6, AnsatzName::circuit_9, AnsatzName::circuit_15,
          AnsatzName::circuit_19, AnsatzName::no_entangling,
          AnsatzName::strongly_entangling, AnsatzName::hardware_efficient}) {
        const AnsatzSpec spec{name, 4, 1};
        for (std::size_t layer = 0; layer < 2; ++layer) {
            const auto ir = build_ansatz(spec, layer);
            const std::size_t base = layer * params_per_block(name, 4);
            std::vector<bool> seen(params_per_block(name, 4), false);
            for (const auto& tg : ir.gates) {
                for (std::size_t s : tg.slots) {
                    REQUIRE(s >= base);
                    REQUIRE(s < base + seen.size());
                    seen[s - base] = true;
                }
            }
            for (bool b : seen) {
                REQUIRE(b);
            }
        }
    }
}

TEST_CASE("build_ansatz never emits encoding gates") {
    for (AnsatzName name :
         {AnsatzName::circuit_6, AnsatzName::circuit_19,
          AnsatzName::strongly_entangling, AnsatzName::hardware_efficient}) {
        const auto ir = build_ansatz({name, 3, 1}, 0);
        for (const auto& tg : ir.gates) {
            REQUIRE(tg.tag != GateTag::encoding);
        }
        CHECK(ir.encoding_gate_count == 0);
    }
}

TEST_CASE("deterministic construction") {
    const auto a = build_ansatz({AnsatzName::circuit_19, 4, 1}, 1);
    const auto b = build_ansatz({AnsatzName::circuit_19, 4, 1}, 1);
    REQUIRE(a.describe() == b.describe());
}

TEST_CASE("name parsing is case-insensitive") {
    CHECK(parse_ansatz_name("circuit_19") == AnsatzName::circuit_19);
    CHECK(parse_ansatz_name("CIRCUIT_19") == AnsatzName::circuit_19);
    CHECK(parse_ansatz_name("Hardware_Efficient") ==
          AnsatzName::hardware_efficient);
    CHECK(parse_ansatz_name("no_entangling") == AnsatzName::no_entangling);
    CHECK_THROWS_AS(parse_ansatz_name("circuit_0"), std::invalid_argument);
}

TEST_CASE("qubit minimums") {
    CHECK_THROWS_AS(build_ansatz({AnsatzName::circuit_19, 1, 1}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_ansatz({AnsatzName::strongly_entangling, 1, 1}, 0),
                    std::invalid_argument);
    CHECK_NOTHROW(build_ansatz({AnsatzName::no_entangling, 1, 1}, 0));
    CHECK_THROWS_AS(parameter_count({AnsatzName::circuit_19, 4, 0}),
                    std::invalid_argument);
}

TEST_CASE("controlled-rotation decompositions match the dense oracle") {
    // Build tiny circuits through the emitter path (via Circuit_3 / Circuit_19
    // blocks on 2 qubits) and compare their unitary against directly
    // constructed controlled-rotation matrices.
    RngStream rng(2024);
    for (int rep = 0; rep < 8; ++rep) {
        const double theta = rng.uniform_angle();

        // CRZ: take the circuit_3 block on 2 qubits, zero the single-qubit
        // rotations, set the CRZ slot to theta.
        {
            const auto ir = build_ansatz({AnsatzName::circuit_3, 2, 1}, 0);
            std::vector<double> params(ir.param_count, 0.0);
            params[4] = theta; // slots 0..3 are RX/RZ columns, slot 4 the CRZ
            const auto bound = bind_parameters(ir, params, 0.0);
            const auto u = test::circuit_unitary(bound);
            // CRZ(control=1, target=0) in the 2-qubit basis |q0 q1>:
            // control is qubit 1 (LSB of the index).
            const cdouble em = std::exp(-0.5i * theta);
            const cdouble ep = std::exp(0.5i * theta);
            test::Matrix ref = test::identity(4);
            ref[1][1] = em; // |01>: control 1, target 0 -> phase e^{-i t/2}
            ref[3][3] = ep; // |11>: control 1, target 1
            for (std::size_t i = 0; i < 4; ++i) {
                for (std::size_t j = 0; j < 4; ++j) {
                    REQUIRE_THAT(std::abs(u[i][j] - ref[i][j]),
                                 WithinAbs(0.0, 1e-10));
                }
            }
        }

        // CRX: same trick on the circuit_19 block (ring on 2 qubits has two
        // CRX gates; zero one of them).
        {
            const auto ir = build_ansatz({AnsatzName::circuit_19, 2, 1}, 0);
            std::vector<double> params(ir.param_count, 0.0);
            params[4] = theta; // first CRX of the ring: control 1, target 0
            const auto bound = bind_parameters(ir, params, 0.0);
            const auto u = test::circuit_unitary(bound);
            const double c = std::cos(theta / 2);
            const cdouble is = -1i * std::sin(theta / 2);
            // CRX(control=1, target=0): acts on {|01>, |11>} = indices {1, 3}.
            test::Matrix ref = test::identity(4);
            ref[1][1] = c;
            ref[1][3] = is;
            ref[3][1] = is;
            ref[3][3] = c;
            for (std::size_t i = 0; i < 4; ++i) {
                for (std::size_t j = 0; j < 4; ++j) {
                    REQUIRE_THAT(std::abs(u[i][j] - ref[i][j]),
                                 WithinAbs(0.0, 1e-10));
                }
            }
        }
    }
}

TEST_CASE("golden layouts, n=4, first block") {
    std::ostringstream all;
    for (AnsatzName name :
         {AnsatzName::idle, AnsatzName::circuit_1, AnsatzName::circuit_2,
          AnsatzName::circuit_3, AnsatzName::circuit_6, AnsatzName::circuit_9,
          AnsatzName::circuit_15, AnsatzName::circuit_19,
          AnsatzName::no_entangling, AnsatzName::strongly_entangling,
          AnsatzName::hardware_efficient}) {
        all << "== " << to_string(name) << "\n"
            << build_ansatz({name, 4, 1}, 0).describe();
    }
    std::ifstream golden(std::string(QFM_GOLDEN_DIR) +
                         "/ansatz_layouts_n4.txt");
    REQUIRE(golden.good());
    std::stringstream expected;
    expected << golden.rdbuf();
    REQUIRE(all.str() == expected.str());
}
