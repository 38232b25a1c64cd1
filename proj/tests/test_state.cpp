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

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "qfm/state.hpp"
#include "support/test_helpers.hpp"

using namespace qfm;
using Catch::Matchers::WithinAbs;
using namespace std::complex_literals;

namespace {

QuantumState bell_pair() {
    auto s = QuantumState::zero_pure(2);
    apply_gate(s, Gate::h(0));
    apply_gate(s, Gate::cnot(0, 1));
    return s;
}

} // namespace

TEST_CASE("qubit 0 is the most significant bit of the basis index") {
    auto s = QuantumState::zero_pure(2);
    apply_gate(s, Gate::x(0));
    // |10> lives at index 2.
    CHECK_THAT(std::abs(s.data()[2]), WithinAbs(1.0, 1e-12));
    CHECK_THAT(std::abs(s.data()[1]), WithinAbs(0.0, 1e-12));
}

TEST_CASE("Hadamard on |0>") {
    auto s = QuantumState::zero_pure(1);
    apply_gate(s, Gate::h(0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK_THAT(std::abs(s.data()[0] - inv_sqrt2), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(s.data()[1] - inv_sqrt2), WithinAbs(0.0, 1e-12));
}

TEST_CASE("RX(pi) on |0> gives -i|1>") {
    auto s = QuantumState::zero_pure(1);
    apply_gate(s, Gate::rx(std::numbers::pi, 0));
    CHECK_THAT(std::abs(s.data()[0]), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(s.data()[1] - cdouble{0.0, -1.0}),
               WithinAbs(0.0, 1e-12));
}

TEST_CASE("CNOT entangles a superposed control") {
    const auto s = bell_pair();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK_THAT(std::abs(s.data()[0] - inv_sqrt2), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(s.data()[3] - inv_sqrt2), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(s.data()[1]), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(s.data()[2]), WithinAbs(0.0, 1e-12));
}

TEST_CASE("every gate kind is unitary at random angles") {
    RngStream rng(1234);
    for (int rep = 0; rep < 25; ++rep) {
        auto ir = test::random_circuit(2, 1, rng);
        const auto& g = ir.gates[0].gate;
        const auto u = test::as_matrix(g);
        const auto prod = test::matmul(test::dagger(u), u);
        for (std::size_t i = 0; i < u.size(); ++i) {
            for (std::size_t j = 0; j < u.size(); ++j) {
                const cdouble expect = (i == j) ? 1.0 : 0.0;
                REQUIRE_THAT(std::abs(prod[i][j] - expect),
                             WithinAbs(0.0, 1e-10));
            }
        }
    }
}

TEST_CASE("gate application matches the dense-matrix oracle") {
    RngStream rng(777);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 4));
        auto ir = test::random_circuit(n, 8, rng);
        QuantumState s = simulate_pure(ir);
        const auto ref = test::reference_state(ir);
        for (std::size_t i = 0; i < ref.size(); ++i) {
            REQUIRE_THAT(std::abs(s.data()[i] - ref[i]),
                         WithinAbs(0.0, 1e-10));
        }
        CHECK_THAT(s.norm_squared(), WithinAbs(1.0, 1e-10));
    }
}

TEST_CASE("gate errors") {
    auto s = QuantumState::zero_pure(2);
    CHECK_THROWS_AS(apply_gate(s, Gate::h(2)), std::out_of_range);
    CHECK_THROWS_AS(apply_gate(s, Gate::rx(std::nan(""), 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(s, Gate::cnot(1, 1)), std::invalid_argument);
}

TEST_CASE("bit-flip channel at p=0.5 fully mixes |0><0|") {
    auto s = QuantumState::zero_pure(1);
    const double h = std::sqrt(0.5);
    KrausChannel bf({{h, 0, 0, h}, {0, h, h, 0}}, {0});
    apply_kraus(s, bf);
    REQUIRE(s.is_mixed());
    CHECK_THAT(expectation(s, PauliString::z(0)), WithinAbs(0.0, 1e-12));
    CHECK_THAT(s.norm_squared(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("amplitude damping at gamma=1 decays |1><1| to |0><0|") {
    auto s = QuantumState::zero_pure(1);
    apply_gate(s, Gate::x(0));
    KrausChannel ad({{1, 0, 0, 0}, {0, 1, 0, 0}}, {0});
    apply_kraus(s, ad);
    CHECK_THAT(expectation(s, PauliString::z(0)), WithinAbs(1.0, 1e-12));
}

TEST_CASE("non-trace-preserving channel is rejected at construction") {
    CHECK_THROWS_AS(KrausChannel({{0.5, 0, 0, 0.5}}, {0}),
                    std::invalid_argument);
}

TEST_CASE("kraus application matches the dense oracle on random channels") {
    RngStream rng(4242);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 2;
        auto ir = test::random_circuit(n, 6, rng);
        QuantumState s = simulate_pure(ir);
        s.promote_to_mixed();

        // Depolarising channel on a random wire.
        const double p = rng.uniform(0.0, 1.0);
        const std::size_t wire = rng.uniform(0.0, 1.0) < 0.5 ? 0 : 1;
        const double a = std::sqrt(1.0 - p);
        const double b = std::sqrt(p / 3.0);
        KrausChannel dp({{a, 0, 0, a},
                         {0, b, b, 0},
                         {0, -1i * b, 1i * b, 0},
                         {b, 0, 0, -b}},
                        {wire});
        apply_kraus(s, dp);

        // Oracle: embed each operator and apply by dense algebra.
        const auto psi = test::reference_state(ir);
        test::Matrix rho(psi.size(), std::vector<cdouble>(psi.size()));
        for (std::size_t i = 0; i < psi.size(); ++i) {
            for (std::size_t j = 0; j < psi.size(); ++j) {
                rho[i][j] = psi[i] * std::conj(psi[j]);
            }
        }
        std::vector<test::Matrix> full_ops;
        for (const auto& op : dp.operators()) {
            test::Matrix local(2, std::vector<cdouble>(2));
            local[0][0] = op[0];
            local[0][1] = op[1];
            local[1][0] = op[2];
            local[1][1] = op[3];
            full_ops.push_back(
                wire == 0 ? test::kron(local, test::identity(2))
                          : test::kron(test::identity(2), local));
        }
        const auto ref = test::reference_kraus(rho, full_ops);
        const std::size_t dim = psi.size();
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                REQUIRE_THAT(std::abs(s.data()[i * dim + j] - ref[i][j]),
                             WithinAbs(0.0, 1e-10));
            }
        }
        CHECK_THAT(s.norm_squared(), WithinAbs(1.0, 1e-9));
    }
}

TEST_CASE("expectation values") {
    SECTION("Z on |0>") {
        auto s = QuantumState::zero_pure(1);
        CHECK_THAT(expectation(s, PauliString::z(0)), WithinAbs(1.0, 1e-12));
    }
    SECTION("Z on RX(x)|0> is cos x") {
        auto s = QuantumState::zero_pure(1);
        apply_gate(s, Gate::rx(std::numbers::pi / 2, 0));
        CHECK_THAT(expectation(s, PauliString::z(0)), WithinAbs(0.0, 1e-12));
    }
    SECTION("ZZ on the Bell state") {
        const auto s = bell_pair();
        CHECK_THAT(expectation(s, PauliString::parse("Z0Z1")),
                   WithinAbs(1.0, 1e-12));
    }
    SECTION("weight scales the result") {
        auto s = QuantumState::zero_pure(1);
        CHECK_THAT(expectation(s, PauliString::parse("0.25*Z0")),
                   WithinAbs(0.25, 1e-12));
    }
    SECTION("pure and mixed paths agree on random circuits") {
        RngStream rng(99);
        for (int rep = 0; rep < 12; ++rep) {
            const std::size_t n =
                1 + static_cast<std::size_t>(rng.uniform(0, 5));
            auto ir = test::random_circuit(n, 10, rng);
            QuantumState pure = simulate_pure(ir);
            QuantumState dm = QuantumState::zero_pure(n);
            dm.promote_to_mixed();
            for (const auto& tg : ir.gates) {
                apply_gate(dm, tg.gate);
            }
            const PauliString obs = PauliString::z(0);
            REQUIRE_THAT(expectation(pure, obs) - expectation(dm, obs),
                         WithinAbs(0.0, 1e-9));
        }
    }
}

TEST_CASE("fidelity") {
    const auto zero = QuantumState::zero_pure(1);
    auto one = QuantumState::zero_pure(1);
    apply_gate(one, Gate::x(0));
    auto plus = QuantumState::zero_pure(1);
    apply_gate(plus, Gate::h(0));

    CHECK_THAT(fidelity(zero, zero), WithinAbs(1.0, 1e-12));
    CHECK_THAT(fidelity(zero, one), WithinAbs(0.0, 1e-12));
    CHECK_THAT(fidelity(zero, plus), WithinAbs(0.5, 1e-12));

    SECTION("symmetric") {
        RngStream rng(5);
        for (int rep = 0; rep < 10; ++rep) {
            auto a = QuantumState::from_amplitudes(2, test::haar_state(2, rng));
            auto b = QuantumState::from_amplitudes(2, test::haar_state(2, rng));
            REQUIRE(fidelity(a, b) == fidelity(b, a));
        }
    }
    SECTION("dimension mismatch") {
        CHECK_THROWS_AS(fidelity(zero, bell_pair()), std::invalid_argument);
    }
}

TEST_CASE("subsystem purity") {
    SECTION("product state") {
        const auto s = QuantumState::zero_pure(2);
        CHECK_THAT(subsystem_purity(s, 0), WithinAbs(1.0, 1e-12));
    }
    SECTION("Bell state is maximally mixed per qubit") {
        const auto s = bell_pair();
        CHECK_THAT(subsystem_purity(s, 0), WithinAbs(0.5, 1e-12));
        CHECK_THAT(subsystem_purity(s, 1), WithinAbs(0.5, 1e-12));
    }
    SECTION("4-qubit GHZ") {
        auto s = QuantumState::zero_pure(4);
        apply_gate(s, Gate::h(0));
        apply_gate(s, Gate::cnot(0, 1));
        apply_gate(s, Gate::cnot(0, 2));
        apply_gate(s, Gate::cnot(0, 3));
        CHECK_THAT(subsystem_purity(s, 2), WithinAbs(0.5, 1e-12));
    }
    SECTION("bounds hold for random states") {
        RngStream rng(31);
        for (int rep = 0; rep < 20; ++rep) {
            auto ir = test::random_circuit(3, 12, rng);
            const auto s = simulate_pure(ir);
            for (std::size_t q = 0; q < 3; ++q) {
                const double p = subsystem_purity(s, q);
                REQUIRE(p >= 0.5 - 1e-9);
                REQUIRE(p <= 1.0 + 1e-9);
            }
        }
    }
    SECTION("mixed input") {
        auto s = QuantumState::zero_pure(1);
        const double h = std::sqrt(0.5);
        apply_kraus(s, KrausChannel({{h, 0, 0, h}, {0, h, h, 0}}, {0}));
        CHECK_THAT(subsystem_purity(s, 0), WithinAbs(0.5, 1e-12));
    }
    SECTION("index out of range") {
        CHECK_THROWS_AS(subsystem_purity(QuantumState::zero_pure(2), 2),
                        std::out_of_range);
    }
}

TEST_CASE("measurement probabilities") {
    SECTION("|0>") {
        const auto s = QuantumState::zero_pure(1);
        const std::array<std::size_t, 1> w{0};
        const auto p = measurement_probabilities(s, w);
        CHECK_THAT(p[0], WithinAbs(1.0, 1e-12));
        CHECK_THAT(p[1], WithinAbs(0.0, 1e-12));
    }
    SECTION("H|0>") {
        auto s = QuantumState::zero_pure(1);
        apply_gate(s, Gate::h(0));
        const std::array<std::size_t, 1> w{0};
        const auto p = measurement_probabilities(s, w);
        CHECK_THAT(p[0], WithinAbs(0.5, 1e-12));
        CHECK_THAT(p[1], WithinAbs(0.5, 1e-12));
    }
    SECTION("Bell state on both wires") {
        const auto s = bell_pair();
        const std::array<std::size_t, 2> w{0, 1};
        const auto p = measurement_probabilities(s, w);
        CHECK_THAT(p[0], WithinAbs(0.5, 1e-12));
        CHECK_THAT(p[1], WithinAbs(0.0, 1e-12));
        CHECK_THAT(p[2], WithinAbs(0.0, 1e-12));
        CHECK_THAT(p[3], WithinAbs(0.5, 1e-12));
    }
    SECTION("wire order controls the outcome index") {
        auto s = QuantumState::zero_pure(2);
        apply_gate(s, Gate::x(1)); // |01>
        const std::array<std::size_t, 2> fwd{0, 1};
        const std::array<std::size_t, 2> rev{1, 0};
        CHECK_THAT(measurement_probabilities(s, fwd)[1],
                   WithinAbs(1.0, 1e-12));
        CHECK_THAT(measurement_probabilities(s, rev)[2],
                   WithinAbs(1.0, 1e-12));
    }
    SECTION("sums to one for random states") {
        RngStream rng(8);
        for (int rep = 0; rep < 10; ++rep) {
            auto ir = test::random_circuit(3, 10, rng);
            const auto s = simulate_pure(ir);
            const std::array<std::size_t, 2> w{0, 2};
            const auto p = measurement_probabilities(s, w);
            double total = 0.0;
            for (double v : p) {
                REQUIRE(v >= -1e-12);
                total += v;
            }
            REQUIRE_THAT(total, WithinAbs(1.0, 1e-9));
        }
    }
    SECTION("duplicate wires rejected") {
        const auto s = QuantumState::zero_pure(2);
        const std::array<std::size_t, 2> w{1, 1};
        CHECK_THROWS_AS(measurement_probabilities(s, w),
                        std::invalid_argument);
    }
}
