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
//
// Minimal library walkthrough: build a model, extract its exact spectrum,
// and show that the Fourier series reproduces f(x) on a sweep.

#include <cstdio>

#include "qfm/fourier_tree.hpp"
#include "qfm/model.hpp"

int main() {
    qfm::ModelConfig cfg;
    cfg.ansatz = {qfm::AnsatzName::hardware_efficient, 3, 2};
    const qfm::CircuitIR ir = qfm::construct(cfg);

    const qfm::RngStream rng(7);
    const auto params = qfm::sample_parameters(ir, 1, rng)[0];

    const qfm::Spectrum spectrum = qfm::analytical_spectrum(ir, params);
    std::printf("frequency  coefficient\n");
    for (std::size_t i = 0; i < spectrum.frequencies.size(); ++i) {
        std::printf("%9d  % .6f %+.6fi\n", spectrum.frequencies[i],
                    spectrum.coefficients[i].real(),
                    spectrum.coefficients[i].imag());
    }

    std::printf("\n        x        f(x)   series\n");
    for (int j = 0; j <= 8; ++j) {
        const double x = 2.0 * std::numbers::pi * j / 8.0;
        std::printf("%9.4f  %9.6f  %9.6f\n", x,
                    qfm::evaluate(ir, params, x), spectrum.reconstruct(x));
    }
    return 0;
}
