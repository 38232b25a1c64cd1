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

#include <cmath>
#include <complex>
#include <numbers>

#include "qfm/coefficients.hpp"
#include "qfm/fourier_tree.hpp"
#include "qfm/model.hpp"
#include "support/test_helpers.hpp"

using namespace qfm;
using Catch::Matchers::WithinAbs;

namespace {

CircuitIR model_ir(AnsatzName name, std::size_t n, std::size_t layers) {
    ModelConfig cfg;
    cfg.ansatz = {name, n, layers};
    return construct(cfg);
}

CircuitIR ry_rx_circuit() {
    // W = RY(theta) followed by the RX(x) encoding on one qubit.
    CircuitIR ir;
    ir.n_qubits = 1;
    ir.param_count = 1;
    ir.append(TaggedGate::trainable(Gate{GateKind::RY, {0}, {0.0}}, {0}));
    ir.append(TaggedGate::encoding(GateKind::RX, 0));
    return ir;
}

} // namespace

TEST_CASE("RY(theta) RX(x) expansion: c_{+-1} = cos(theta)/2") {
    const auto ir = ry_rx_circuit();
    for (double theta : {0.0, 0.4, std::numbers::pi / 3, 2.1}) {
        const std::vector<double> params{theta};
        const auto spec = analytical_spectrum(ir, params);
        CHECK_THAT(std::abs(spec.at(1) - cdouble{std::cos(theta) / 2, 0.0}),
                   WithinAbs(0.0, 1e-12));
        CHECK_THAT(std::abs(spec.at(-1) - cdouble{std::cos(theta) / 2, 0.0}),
                   WithinAbs(0.0, 1e-12));
        CHECK(spec.at(0) == cdouble{0.0, 0.0});
    }
}

TEST_CASE("tree leaves of the textbook example") {
    // Conjugating Z through RY(theta) then RX(x) leaves three terms:
    // cos x cos theta * Z, -cos x sin theta * X, sin x * Y.
    const auto ir = ry_rx_circuit();
    const std::vector<double> params{0.7};
    const FourierTree tree(ir, params);
    REQUIRE(tree.leaves().size() == 3);
    double z_w = 0.0;
    double x_w = 0.0;
    double y_w = 0.0;
    for (const auto& leaf : tree.leaves()) {
        if (leaf.x_mask == 0 && leaf.z_mask == 1) {
            z_w = leaf.weight;
            CHECK(leaf.cos_power == 1);
            CHECK(leaf.sin_power == 0);
        } else if (leaf.x_mask == 1 && leaf.z_mask == 0) {
            x_w = leaf.weight;
            CHECK(leaf.cos_power == 1);
        } else if (leaf.x_mask == 1 && leaf.z_mask == 1) {
            y_w = leaf.weight;
            CHECK(leaf.sin_power == 1);
        }
    }
    CHECK_THAT(z_w, WithinAbs(std::cos(0.7), 1e-12));
    CHECK_THAT(x_w, WithinAbs(-std::sin(0.7), 1e-12));
    CHECK_THAT(y_w, WithinAbs(1.0, 1e-12));
}

TEST_CASE("closed-form fixture matches dft bit-for-bit scale") {
    const auto ir = model_ir(AnsatzName::no_entangling, 1, 1);
    const std::vector<double> params(ir.param_count, 0.0);
    const auto ana = analytical_spectrum(ir, params);
    const auto dft = dft_spectrum(ir, params);
    CHECK_THAT(std::abs(ana.at(1) - cdouble{0.5, 0.0}), WithinAbs(0.0, 0.0));
    CHECK(ana.at(0) == cdouble{0.0, 0.0});
    for (int w : {-1, 0, 1}) {
        REQUIRE_THAT(std::abs(ana.at(w) - dft.at(w)), WithinAbs(0.0, 1e-10));
    }
}

TEST_CASE("observable on an untouched qubit gives only c_0 = 1") {
    // Gates act on qubit 0 only; measure Z on qubit 1.
    CircuitIR ir;
    ir.n_qubits = 2;
    ir.param_count = 1;
    ir.append(TaggedGate::trainable(Gate{GateKind::RY, {0}, {0.0}}, {0}));
    ir.append(TaggedGate::encoding(GateKind::RX, 0));
    const std::vector<double> params{1.3};
    const auto spec = analytical_spectrum(ir, params, PauliString::z(1));
    CHECK(spec.at(0) == cdouble{1.0, 0.0});
    CHECK(spec.at(1) == cdouble{0.0, 0.0});
    CHECK(spec.at(-1) == cdouble{0.0, 0.0});
}

TEST_CASE("clifford conjugation matches simulation on random circuits") {
    // Random fixed circuits over the full gate set, constant trig part
    // supplied by one encoding gate; compare f(x) from the tree against the
    // simulator at several x.
    RngStream rng(888);
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        auto ir = test::random_circuit(n, 10, rng);
        ir.param_count = 0;
        // Insert an encoding in the middle so the spectrum is nontrivial.
        const auto mid = ir.gates.begin() +
                         static_cast<std::ptrdiff_t>(ir.gates.size() / 2);
        TaggedGate enc = TaggedGate::encoding(
            GateKind::RX, static_cast<std::size_t>(rng.uniform(
                              0.0, static_cast<double>(n))));
        ir.gates.insert(mid, enc);
        ir.encoding_gate_count = 1;

        const PauliString obs = PauliString::z(
            static_cast<std::size_t>(rng.uniform(0.0, static_cast<double>(n))));
        const auto spec = analytical_spectrum(ir, {}, obs);
        for (int k = 0; k < 7; ++k) {
            const double x = rng.uniform_angle();
            const double via_sim =
                expectation(simulate_pure(bind_parameters(ir, {}, x)), obs);
            REQUIRE_THAT(spec.reconstruct(x) - via_sim, WithinAbs(0.0, 1e-9));
        }
    }
}

TEST_CASE("cross-engine equivalence on supported ansaetze") {
    RngStream rng(31337);
    for (AnsatzName name :
         {AnsatzName::circuit_1, AnsatzName::circuit_2, AnsatzName::circuit_3,
          AnsatzName::circuit_6, AnsatzName::circuit_9, AnsatzName::circuit_15,
          AnsatzName::circuit_19, AnsatzName::no_entangling,
          AnsatzName::strongly_entangling,
          AnsatzName::hardware_efficient}) {
        const std::size_t n = std::max<std::size_t>(2, ansatz_min_qubits(name));
        for (std::size_t layers = 1; layers <= 2; ++layers) {
            const auto ir = model_ir(name, n, layers);
            for (int rep = 0; rep < 3; ++rep) {
                const auto params = sample_parameters(
                    ir, 1, rng.substream(static_cast<std::uint64_t>(rep)))[0];
                const auto ana = analytical_spectrum(ir, params);
                const auto dft = dft_spectrum(ir, params);
                REQUIRE(ana.frequencies == dft.frequencies);
                for (std::size_t i = 0; i < ana.frequencies.size(); ++i) {
                    REQUIRE_THAT(
                        std::abs(ana.coefficients[i] - dft.coefficients[i]),
                        WithinAbs(0.0, 1e-8));
                }
            }
        }
    }
}

TEST_CASE("analytical engine exposes structurally absent frequencies") {
    // No_Entangling with a single-qubit observable depends only on that
    // qubit's encoding: support stays within {-L..L} while the grid spans
    // {-nL..nL}. Those extra frequencies must come out exactly zero.
    RngStream rng(404);
    const auto ir = model_ir(AnsatzName::no_entangling, 4, 1);
    const auto params = sample_parameters(ir, 1, rng)[0];
    const auto ana = analytical_spectrum(ir, params);
    REQUIRE(ana.frequencies.size() == 9);
    for (int w : {-4, -3, -2, 2, 3, 4}) {
        REQUIRE(ana.at(w) == cdouble{0.0, 0.0});
    }
    // And the dft agrees those frequencies carry no weight.
    const auto dft = dft_spectrum(ir, params);
    for (int w : {-4, -3, -2, 2, 3, 4}) {
        REQUIRE_THAT(std::abs(dft.at(w)), WithinAbs(0.0, 1e-9));
    }
    // Support sets from sampled stats differ exactly on those frequencies.
    const auto stats_ana = mean_coefficient_magnitudes(
        ir, 5, rng, Spectrum::Method::analytical);
    for (int w : stats_ana.support) {
        REQUIRE(std::abs(w) <= 1);
    }
}

TEST_CASE("parseval holds for the analytical spectrum") {
    RngStream rng(2718);
    const auto ir = model_ir(AnsatzName::circuit_19, 3, 1);
    const auto params = sample_parameters(ir, 1, rng)[0];
    const auto spec = analytical_spectrum(ir, params);
    const std::size_t grid = 2 * max_frequency(ir) + 1;
    double mean_f2 = 0.0;
    for (std::size_t j = 0; j < grid; ++j) {
        const double x = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(grid);
        const double f = evaluate(ir, params, x);
        mean_f2 += f * f;
    }
    mean_f2 /= static_cast<double>(grid);
    double power = 0.0;
    for (const auto& c : spec.coefficients) {
        power += std::norm(c);
    }
    CHECK_THAT(mean_f2 - power, WithinAbs(0.0, 1e-9));
}

TEST_CASE("reconstruction reproduces f at random inputs") {
    RngStream rng(1618);
    for (AnsatzName name :
         {AnsatzName::circuit_9, AnsatzName::hardware_efficient}) {
        const auto ir = model_ir(name, 3, 2);
        const auto params = sample_parameters(ir, 1, rng)[0];
        const auto spec = analytical_spectrum(ir, params);
        for (int k = 0; k < 20; ++k) {
            const double x = rng.uniform(-10.0, 10.0);
            REQUIRE_THAT(spec.reconstruct(x) - evaluate(ir, params, x),
                         WithinAbs(0.0, 1e-9));
            REQUIRE_THAT(spec.reconstruct_complex(x).imag(),
                         WithinAbs(0.0, 1e-9));
        }
    }
}
