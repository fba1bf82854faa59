// Copyright 2026 The fermiqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FERMIQI_TESTS_SUPPORT_HPP
#define FERMIQI_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fermiqi/fock.hpp"

namespace fermiqi::testing {

inline ModeOrder letters(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; k++) {
        labels.emplace_back(1, static_cast<char>('a' + k));
    }
    return ModeOrder(labels);
}

/// Normalized state with Gaussian amplitudes on a random subset of occupations.
inline FockVector random_state(const ModeOrder &order, std::mt19937_64 &rng) {
    const std::size_t n = order.size();
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::normal_distribution<double> normal;
    std::bernoulli_distribution keep(0.6);
    std::vector<std::pair<Occupation, Complex>> terms;
    for (std::uint64_t i = 0; i < dim; i++) {
        if (keep(rng)) {
            double re = normal(rng);
            double im = normal(rng);
            terms.emplace_back(Occupation(n, i), Complex(re, im));
        }
    }
    if (terms.empty()) {
        terms.emplace_back(Occupation(n, 0), 1.0);
    }
    return FockVector(order, terms).normalized();
}

inline ModeOrder shuffled(const ModeOrder &order, std::mt19937_64 &rng) {
    auto labels = order.labels();
    std::shuffle(labels.begin(), labels.end(), rng);
    return ModeOrder(labels);
}

inline double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace fermiqi::testing

#endif
