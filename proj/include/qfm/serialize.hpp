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
 * JSON views of the result types. Kept separate so the core headers stay
 * free of the json dependency.
 */

#pragma once

#include <json.hpp>

#include "qfm/coefficients.hpp"
#include "qfm/entanglement.hpp"
#include "qfm/expressibility.hpp"
#include "qfm/noise.hpp"
#include "qfm/spectrum.hpp"

namespace qfm {

inline nlohmann::json to_json(const Spectrum& spec) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : spec.coefficients) {
        coeffs.push_back({c.real(), c.imag()});
    }
    return {
        {"method", std::string(to_string(spec.method))},
        {"frequencies", spec.frequencies},
        {"coefficients", std::move(coeffs)},
    };
}

inline nlohmann::json to_json(const CoefficientStats& stats) {
    return {
        {"frequencies", stats.frequencies},
        {"mean_magnitudes", stats.mean_magnitudes},
        {"grand_mean", stats.grand_mean},
        {"support", stats.support},
    };
}

inline nlohmann::json to_json(const NoiseParams& np) {
    return {
        {"p_bf", np.p_bf},
        {"p_pf", np.p_pf},
        {"p_dp", np.p_dp},
        {"p_ad", np.p_ad},
        {"p_pd", np.p_pd},
        {"p_me", np.p_me},
        {"p_sp", np.p_sp},
        {"t1", np.t1},
        {"t2", np.t2},
        {"t_factor", np.t_factor},
        {"gate_error_mu", np.gate_error_mu},
    };
}

inline NoiseParams noise_from_json(const nlohmann::json& j) {
    NoiseParams np;
    np.p_bf = j.value("p_bf", 0.0);
    np.p_pf = j.value("p_pf", 0.0);
    np.p_dp = j.value("p_dp", 0.0);
    np.p_ad = j.value("p_ad", 0.0);
    np.p_pd = j.value("p_pd", 0.0);
    np.p_me = j.value("p_me", 0.0);
    np.p_sp = j.value("p_sp", 0.0);
    np.t1 = j.value("t1", 0.0);
    np.t2 = j.value("t2", 0.0);
    np.t_factor = j.value("t_factor", 0.0);
    np.gate_error_mu = j.value("gate_error_mu", 0.0);
    np.validate();
    return np;
}

inline nlohmann::json to_json(const EntanglementResult& r) {
    return {
        {"method", std::string(to_string(r.method))},
        {"q_mean", r.q_mean},
        {"n_samples", r.n_samples},
    };
}

} // namespace qfm
