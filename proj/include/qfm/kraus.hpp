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
 * Kraus channels: trace-preserving maps rho -> sum_i K_i rho K_i^dagger.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qfm/gates.hpp"

namespace qfm {

/**
 * @brief A completely positive trace-preserving map on `wires`.
 *
 * Operators are dense row-major 2^k x 2^k matrices (k = wires.size()).
 * Completeness sum_i K_i^dagger K_i = I is checked at construction to 1e-9.
 */
class KrausChannel {
  public:
    KrausChannel(std::vector<std::vector<cdouble>> operators,
                 std::vector<std::size_t> wires)
        : operators_{std::move(operators)}, wires_{std::move(wires)} {
        if (operators_.empty()) {
            throw std::invalid_argument("Kraus channel needs >= 1 operator");
        }
        if (wires_.empty()) {
            throw std::invalid_argument("Kraus channel needs >= 1 wire");
        }
        const std::size_t dim = std::size_t{1} << wires_.size();
        for (const auto& op : operators_) {
            if (op.size() != dim * dim) {
                throw std::invalid_argument(
                    "Kraus operator dimension mismatch");
            }
        }
        check_completeness(dim);
    }

    const std::vector<std::vector<cdouble>>& operators() const {
        return operators_;
    }
    const std::vector<std::size_t>& wires() const { return wires_; }

  private:
    void check_completeness(std::size_t dim) const {
        std::vector<cdouble> acc(dim * dim, 0.0);
        for (const auto& op : operators_) {
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) {
                    cdouble s = 0.0;
                    for (std::size_t k = 0; k < dim; ++k) {
                        s += std::conj(op[k * dim + i]) * op[k * dim + j];
                    }
                    acc[i * dim + j] += s;
                }
            }
        }
        double err = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                const cdouble expect = (i == j) ? 1.0 : 0.0;
                err = std::max(err, std::abs(acc[i * dim + j] - expect));
            }
        }
        if (err > 1e-9) {
            throw std::invalid_argument(
                "Kraus channel is not trace-preserving (deviation " +
                std::to_string(err) + ")");
        }
    }

    std::vector<std::vector<cdouble>> operators_;
    std::vector<std::size_t> wires_;
};

} // namespace qfm
