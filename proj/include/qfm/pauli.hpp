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
 * Weighted Pauli strings, used as observables.
 */

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfm/gates.hpp"

namespace qfm {

/// Single-qubit Pauli axis. Also selects the encoding rotation (RX/RY/RZ).
enum class PauliAxis { X, Y, Z };

inline char axis_char(PauliAxis a) {
    switch (a) {
    case PauliAxis::X:
        return 'X';
    case PauliAxis::Y:
        return 'Y';
    case PauliAxis::Z:
        return 'Z';
    }
    return '?';
}

inline GateKind axis_rotation(PauliAxis a) {
    switch (a) {
    case PauliAxis::X:
        return GateKind::RX;
    case PauliAxis::Y:
        return GateKind::RY;
    case PauliAxis::Z:
        return GateKind::RZ;
    }
    throw std::invalid_argument("bad axis");
}

/**
 * @brief Real-weighted Pauli string, e.g. 0.5 * X0 Z2.
 *
 * Factors are stored sparsely (identity elsewhere), sorted by qubit index,
 * one factor per qubit.
 */
struct PauliString {
    std::vector<std::pair<std::size_t, PauliAxis>> factors;
    double weight = 1.0;

    static PauliString z(std::size_t qubit) {
        return PauliString{{{qubit, PauliAxis::Z}}, 1.0};
    }

    /**
     * @brief Parse "Z0", "X0Y2", "0.5*Z0Z1", "-1*X3". Case-insensitive.
     */
    static PauliString parse(std::string_view text) {
        PauliString out;
        std::string s(text);
        s.erase(std::remove_if(s.begin(), s.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                s.end());
        if (s.empty()) {
            throw std::invalid_argument("empty observable string");
        }
        if (const auto star = s.find('*'); star != std::string::npos) {
            const std::string w = s.substr(0, star);
            std::size_t used = 0;
            out.weight = std::stod(w, &used);
            if (used != w.size() || !std::isfinite(out.weight)) {
                throw std::invalid_argument("bad observable weight: " + w);
            }
            s = s.substr(star + 1);
        }
        std::size_t i = 0;
        while (i < s.size()) {
            PauliAxis axis;
            switch (std::toupper(static_cast<unsigned char>(s[i]))) {
            case 'X':
                axis = PauliAxis::X;
                break;
            case 'Y':
                axis = PauliAxis::Y;
                break;
            case 'Z':
                axis = PauliAxis::Z;
                break;
            default:
                throw std::invalid_argument("bad Pauli letter in observable: " +
                                            s);
            }
            ++i;
            std::size_t qubit = 0;
            const auto [ptr, ec] =
                std::from_chars(s.data() + i, s.data() + s.size(), qubit);
            if (ec != std::errc{} || ptr == s.data() + i) {
                throw std::invalid_argument(
                    "missing qubit index in observable: " + s);
            }
            i = static_cast<std::size_t>(ptr - s.data());
            out.factors.emplace_back(qubit, axis);
        }
        out.normalise();
        return out;
    }

    std::string str() const {
        std::string s;
        if (weight != 1.0) {
            s = std::to_string(weight) + "*";
        }
        for (const auto& [q, a] : factors) {
            s += axis_char(a);
            s += std::to_string(q);
        }
        return s.empty() ? "I" : s;
    }

    /// Largest qubit index used; 0 for the identity.
    std::size_t max_wire() const {
        std::size_t m = 0;
        for (const auto& [q, a] : factors) {
            m = std::max(m, q);
        }
        return m;
    }

  private:
    void normalise() {
        std::sort(factors.begin(), factors.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t j = 1; j < factors.size(); ++j) {
            if (factors[j].first == factors[j - 1].first) {
                throw std::invalid_argument(
                    "observable repeats a qubit index");
            }
        }
    }
};

} // namespace qfm
