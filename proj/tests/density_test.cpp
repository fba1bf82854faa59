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

#include "fermiqi/density.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "fermiqi/channels.hpp"
#include "fermiqi/error.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace fermiqi;
using fermiqi::testing::letters;
using fermiqi::testing::max_abs_diff;

namespace {

const ModeOrder kAbc({"a", "b", "c"});
const ModeOrder kAb({"a", "b"});

FockVector phi_abc() {
    return FockVector(kAbc, {{"100", 0.5}, {"010", 0.5}, {"101", 0.5}, {"011", 0.5}});
}

Eigen::MatrixXcd reduced_phi_expected() {
    // 1/2 (|10> + |01>)(<10| + <01|) over a b.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(1, 1) = m(1, 2) = m(2, 1) = m(2, 2) = 0.5;
    return m;
}

DensityMatrix bell_even() {
    const double r = 1 / std::sqrt(2.0);
    return outer(FockVector(kAb, {{"00", r}, {"11", r}}));
}

Eigen::MatrixXcd diag(std::initializer_list<double> values) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) {
        v[i++] = x;
    }
    return v.asDiagonal();
}

}  // namespace

TEST(density_matrix, validates_invariants) {
    EXPECT_NO_THROW(DensityMatrix(kAb, diag({0.25, 0.25, 0.25, 0.25})));
    EXPECT_THROW(DensityMatrix(kAb, diag({0.5, 0.25, 0.25, 0.25})), Error);
    EXPECT_THROW(DensityMatrix(kAb, diag({1.2, -0.2, 0, 0})), Error);
    EXPECT_THROW(DensityMatrix(kAb, diag({0.5, 0.5})), Error);
    Eigen::MatrixXcd skew = diag({0.5, 0.5, 0, 0});
    skew(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix(kAb, skew), Error);
}

TEST(outer, basis_and_bell) {
    EXPECT_EQ(outer(FockVector::basis(kAb, "00")).matrix(), diag({1, 0, 0, 0}));
    auto bell = bell_even().matrix();
    for (int i : {0, 3}) {
        for (int j : {0, 3}) {
            EXPECT_NEAR(bell(i, j).real(), 0.5, 1e-15);
        }
    }
    EXPECT_EQ(bell(1, 1), Complex(0.0));
    EXPECT_THROW(outer(FockVector(kAb, {{"00", 1.0}, {"11", 1.0}})), Error);
}

TEST(partial_trace, worked_example) {
    auto reduced = partial_trace(outer(phi_abc()), std::vector<std::string>{"c"});
    EXPECT_EQ(reduced.order(), kAb);
    EXPECT_EQ(reduced.matrix(), reduced_phi_expected());
}

TEST(partial_trace, worked_example_after_reordering) {
    auto swapped = reorder_modes(phi_abc(), ModeOrder({"a", "c", "b"}));
    auto reduced = partial_trace(outer(swapped), std::vector<std::string>{"c"});
    EXPECT_EQ(reduced.order(), kAb);
    EXPECT_EQ(reduced.matrix(), reduced_phi_expected());
}

TEST(partial_trace, uncorrelated_mode_is_discarded) {
    Eigen::MatrixXcd rho_a(2, 2);
    rho_a << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
    Eigen::MatrixXcd rho_b(2, 2);
    rho_b << 0.35, 0, 0, 0.65;
    DensityMatrix product(kAb, Eigen::kroneckerProduct(rho_a, rho_b).eval());
    auto reduced = partial_trace(product, std::vector<std::string>{"b"});
    EXPECT_LT(max_abs_diff(reduced.matrix(), rho_a), 1e-15);
}

TEST(partial_trace, all_modes_gives_scalar) {
    auto reduced = partial_trace(outer(phi_abc()), kAbc.labels());
    EXPECT_TRUE(reduced.order().empty());
    ASSERT_EQ(reduced.dimension(), 1);
    EXPECT_NEAR(reduced(0, 0).real(), 1.0, 1e-15);
}

TEST(partial_trace, unknown_label_throws) {
    EXPECT_THROW(partial_trace(outer(phi_abc()), std::vector<std::string>{"z"}), Error);
}

TEST(partial_trace, matches_algebraic_definition) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; trial++) {
        std::size_t n = 2 + trial % 3;
        ModeOrder order = letters(n);
        auto rho = outer(fermiqi::testing::random_state(order, rng));
        std::vector<std::string> traced;
        std::vector<std::size_t> kept;
        for (std::size_t k = 0; k < n; k++) {
            if (std::bernoulli_distribution(0.5)(rng)) {
                traced.push_back(order[k]);
            } else {
                kept.push_back(k);
            }
        }
        auto reduced = partial_trace(rho, traced);
        auto expected = oracle::algebraic_partial_trace(rho.matrix(), n, kept);
        EXPECT_LT(max_abs_diff(reduced.matrix(), expected), 1e-13);
    }
}

TEST(partial_trace, commutes_with_reordering) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; trial++) {
        ModeOrder order = letters(3 + trial % 4);
        auto s = fermiqi::testing::random_state(order, rng);
        ModeOrder sigma = fermiqi::testing::shuffled(order, rng);
        std::vector<std::string> traced{order[std::uniform_int_distribution<std::size_t>(0, order.size() - 1)(rng)]};
        auto via_sigma = partial_trace(outer(reorder_modes(s, sigma)), traced);
        auto direct = partial_trace(outer(s), traced);
        auto direct_moved = reorder_modes(direct, via_sigma.order());
        EXPECT_LT(max_abs_diff(via_sigma.matrix(), direct_moved.matrix()), 1e-12);
    }
}

TEST(partial_trace, preserves_trace_hermiticity_positivity) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 50; trial++) {
        ModeOrder order = letters(4);
        auto rho = outer(fermiqi::testing::random_state(order, rng));
        auto reduced = partial_trace(rho, std::vector<std::string>{"b", "d"});
        EXPECT_NEAR(reduced.matrix().trace().real(), 1.0, 1e-12);
        EXPECT_LT(max_hermitian_deviation(reduced.matrix()), 1e-12);
        EXPECT_GT(spectrum(reduced).min(), -1e-10);
        EXPECT_NO_THROW(DensityMatrix(reduced.order(), reduced.matrix()));
    }
}

TEST(partial_transpose, diagonal_states_are_fixed) {
    DensityMatrix rho(kAb, diag({0.1, 0.2, 0.3, 0.4}));
    EXPECT_EQ(partial_transpose(rho, std::vector<std::string>{"b"}), rho.matrix());
}

TEST(partial_transpose, bell_state_spectrum) {
    auto pt = partial_transpose(bell_even(), std::vector<std::string>{"b"});
    auto s = spectrum(pt);
    ASSERT_EQ(s.size(), 4u);
    // Direct 4x4 eigendecomposition oracle.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> direct(pt);
    EXPECT_NEAR(direct.eigenvalues()[0], -0.5, 1e-15);
    EXPECT_NEAR(s.eigenvalues[0], 0.5, 1e-15);
    EXPECT_NEAR(s.eigenvalues[1], 0.5, 1e-15);
    EXPECT_NEAR(s.eigenvalues[2], 0.5, 1e-15);
    EXPECT_NEAR(s.eigenvalues[3], -0.5, 1e-15);
}

TEST(partial_transpose, matches_bipartite_transpose) {
    std::mt19937_64 rng(41);
    auto m = oracle::random_density(8, 8, rng);
    DensityMatrix rho(letters(3), m);
    // Modes b c form the second factor of a 2 x 4 split.
    EXPECT_EQ(partial_transpose(rho, std::vector<std::string>{"b", "c"}), partial_transpose(m, {2, 4}, Side::Second));
    EXPECT_EQ(partial_transpose(rho, std::vector<std::string>{"a"}), partial_transpose(m, {2, 4}, Side::First));
}

TEST(partial_transpose, involution_and_trace) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; trial++) {
        DensityMatrix rho(letters(3), oracle::random_density(8, 1 + trial % 8, rng));
        std::vector<std::string> sub{"a", "c"};
        auto once = partial_transpose(rho, sub);
        DensityMatrix back = DensityMatrix::trusted(rho.order(), once);
        EXPECT_EQ(partial_transpose(back, sub), rho.matrix());
        EXPECT_NEAR(std::abs(once.trace() - 1.0), 0.0, 1e-14);
    }
}

TEST(partial_transpose, degenerate_subsystems) {
    DensityMatrix rho = bell_even();
    EXPECT_EQ(partial_transpose(rho, std::vector<std::string>{}), rho.matrix());
    EXPECT_EQ(partial_transpose(rho, kAb.labels()), rho.matrix().transpose());
}

TEST(spectrum, examples) {
    auto s = spectrum(DensityMatrix(ModeOrder({"a"}), diag({0.3, 0.7})));
    EXPECT_NEAR(s.eigenvalues[0], 0.7, 1e-15);
    EXPECT_NEAR(s.eigenvalues[1], 0.3, 1e-15);

    auto pure = spectrum(grassmann_output_state(0.0));
    EXPECT_NEAR(pure.eigenvalues[0], 1.0, 1e-14);
    for (std::size_t i = 1; i < 4; i++) {
        EXPECT_NEAR(pure.eigenvalues[i], 0.0, 1e-14);
    }

    // Characteristic polynomial of each parity block.
    const double r = std::numbers::pi / 4;
    auto rho = grassmann_output_state(r);
    auto [e1, e2] = oracle::eig2(rho(0, 0).real(), rho(3, 3).real(), rho(0, 3));
    std::vector<double> expected{e1, e2, rho(1, 1).real(), 0.0};
    std::sort(expected.begin(), expected.end(), std::greater<>());
    auto got = spectrum(rho);
    for (std::size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(got.eigenvalues[i], expected[i], 1e-14);
    }
    EXPECT_NEAR(got.eigenvalues[0], 0.75, 1e-14);
    EXPECT_NEAR(got.eigenvalues[1], 0.25, 1e-14);
}

TEST(spectrum, rejects_non_hermitian) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(spectrum(m), Error);
}

TEST(ssr_check_mixed, examples) {
    for (double r : {0.0, 0.1, 0.5, std::numbers::pi / 4}) {
        EXPECT_TRUE(ssr_check_mixed(grassmann_output_state(r)).valid);
    }
    auto psi = FockVector(kAb, {{"00", 0.5}, {"01", 0.5}, {"10", 0.5}, {"11", 0.5}});
    auto verdict = ssr_check_mixed(outer(psi));
    EXPECT_FALSE(verdict.valid);
    EXPECT_NE(verdict.reason.find("mixes even and odd sectors"), std::string::npos);
    EXPECT_TRUE(ssr_check_mixed(DensityMatrix(kAb, diag({0.25, 0.25, 0.25, 0.25}))).valid);
}

TEST(ssr_check_mixed, agrees_with_pure_check) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; trial++) {
        ModeOrder order = letters(1 + trial % 4);
        FockVector s = fermiqi::testing::random_state(order, rng);
        if (trial % 2) {
            // Project onto one sector to exercise the valid branch too.
            std::vector<std::pair<Occupation, Complex>> kept;
            for (const auto &kv : s.terms()) {
                if (kv.first.even() == (trial % 4 == 1)) {
                    kept.emplace_back(kv.first, kv.second);
                }
            }
            if (kept.empty()) {
                continue;
            }
            s = FockVector(order, kept).normalized();
        }
        EXPECT_EQ(ssr_check_mixed(outer(s)).valid, ssr_check_pure(s).valid);
    }
}

TEST(ssr_separable_two_modes, examples) {
    EXPECT_TRUE(ssr_separable_two_modes(DensityMatrix(kAb, diag({0.25, 0.25, 0.25, 0.25}))));
    EXPECT_FALSE(ssr_separable_two_modes(grassmann_output_state(0.0)));
    EXPECT_FALSE(ssr_separable_two_modes(grassmann_output_state(std::numbers::pi / 4)));
    EXPECT_THROW(ssr_separable_two_modes(outer(phi_abc())), Error);
}
