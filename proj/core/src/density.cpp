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

#include <algorithm>
#include <bit>
#include <cmath>
#include <iostream>
#include <sstream>

#include "fermiqi/error.hpp"

namespace fermiqi {

namespace {

std::string format_double(double value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

void validate(const ModeOrder &order, const Eigen::MatrixXcd &m) {
    const Eigen::Index dim = Eigen::Index{1} << order.size();
    if (m.rows() != dim || m.cols() != dim) {
        throw Error("density matrix must be " + std::to_string(dim) + "x" + std::to_string(dim) + " for " +
                    std::to_string(order.size()) + " modes");
    }
    double deviation = max_hermitian_deviation(m);
    if (deviation > kHermitianTolerance) {
        throw Error("density matrix is not Hermitian (max deviation " + format_double(deviation) + ")");
    }
    Complex trace = m.trace();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        throw Error("density matrix trace is " + format_double(trace.real()) + ", expected 1");
    }
    double smallest = hermitian_spectrum(m, kHermitianTolerance).min();
    if (smallest < -kPositivityTolerance) {
        throw Error("density matrix has negative eigenvalue " + format_double(smallest));
    }
}

// Signs and permuted indices for every occupation of `source` moved into `target`.
struct BasisPermutation {
    std::vector<Eigen::Index> target_index;
    std::vector<double> sign;
};

BasisPermutation basis_permutation(const ModeOrder &source, const ModeOrder &target) {
    auto positions = target.positions_in(source);
    const std::size_t n = source.size();
    const std::uint64_t dim = std::uint64_t{1} << n;
    BasisPermutation out;
    out.target_index.resize(dim);
    out.sign.resize(dim);
    for (std::uint64_t i = 0; i < dim; i++) {
        Occupation occ(n, i);
        out.target_index[i] = static_cast<Eigen::Index>(permute_bits(occ, positions).index());
        out.sign[i] = reorder_sign(occ, positions);
    }
    return out;
}

}  // namespace

DensityMatrix::DensityMatrix(ModeOrder order, Eigen::MatrixXcd matrix)
    : order_(std::move(order)), matrix_(std::move(matrix)) {
    validate(order_, matrix_);
}

DensityMatrix::DensityMatrix(ModeOrder order, Eigen::MatrixXcd matrix, Trusted)
    : order_(std::move(order)), matrix_(std::move(matrix)) {
}

DensityMatrix DensityMatrix::trusted(ModeOrder order, Eigen::MatrixXcd matrix) {
    return DensityMatrix(std::move(order), std::move(matrix), Trusted{});
}

DensityMatrix outer(const FockVector &state) {
    double norm2 = state.norm_squared();
    if (std::abs(norm2 - 1.0) > kNormalizationTolerance) {
        throw Error("outer: state is not normalized (<psi|psi> = " + format_double(norm2) + ")");
    }
    Eigen::VectorXcd v = state.to_dense();
    return DensityMatrix::trusted(state.order(), v * v.adjoint());
}

DensityMatrix reorder_modes(const DensityMatrix &rho, const ModeOrder &new_order) {
    auto perm = basis_permutation(rho.order(), new_order);
    const Eigen::Index dim = rho.dimension();
    Eigen::MatrixXcd out(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            out(perm.target_index[i], perm.target_index[j]) = perm.sign[i] * perm.sign[j] * rho(i, j);
        }
    }
    return DensityMatrix::trusted(new_order, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::string> traced) {
    ModeOrder survivors = rho.order().without(traced);
    const std::size_t kept = survivors.size();
    const std::size_t dropped = rho.num_modes() - kept;

    // Survivors first, traced modes behind them in their original relative order.
    std::vector<std::string> target = survivors.labels();
    for (const auto &label : rho.order().labels()) {
        if (!survivors.contains(label)) {
            target.push_back(label);
        }
    }
    DensityMatrix moved = reorder_modes(rho, ModeOrder(std::move(target)));

    const Eigen::Index kept_dim = Eigen::Index{1} << kept;
    const Eigen::Index dropped_dim = Eigen::Index{1} << dropped;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
    for (Eigen::Index x = 0; x < kept_dim; x++) {
        for (Eigen::Index y = 0; y < kept_dim; y++) {
            Complex total = 0;
            for (Eigen::Index t = 0; t < dropped_dim; t++) {
                total += moved(x * dropped_dim + t, y * dropped_dim + t);
            }
            out(x, y) = total;
        }
    }
    return DensityMatrix::trusted(std::move(survivors), std::move(out));
}

Eigen::MatrixXcd partial_transpose(const DensityMatrix &rho, std::span<const std::string> subsystem) {
    const std::size_t n = rho.num_modes();
    std::uint64_t mask = 0;
    for (const auto &label : subsystem) {
        mask |= std::uint64_t{1} << (n - 1 - rho.order().index_of(label));
    }
    if (mask == 0) {
        std::clog << "warning: partial_transpose over an empty subsystem returns the input unchanged\n";
        return rho.matrix();
    }
    if (std::popcount(mask) == static_cast<int>(n)) {
        std::clog << "warning: partial_transpose over every mode is the full transpose\n";
        return rho.matrix().transpose();
    }
    const Eigen::Index dim = rho.dimension();
    const auto m = static_cast<Eigen::Index>(mask);
    Eigen::MatrixXcd out(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            // Swap the subsystem bits between row and column.
            Eigen::Index row = (i & ~m) | (j & m);
            Eigen::Index col = (j & ~m) | (i & m);
            out(i, j) = rho(row, col);
        }
    }
    return out;
}

Spectrum spectrum(const DensityMatrix &rho) {
    return hermitian_spectrum(rho.matrix());
}

Spectrum spectrum(const Eigen::MatrixXcd &m) {
    return hermitian_spectrum(m);
}

SsrVerdict ssr_check_mixed(const DensityMatrix &rho) {
    const Eigen::Index dim = rho.dimension();
    const std::size_t n = rho.num_modes();
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            bool i_even = std::popcount(static_cast<std::uint64_t>(i)) % 2 == 0;
            bool j_even = std::popcount(static_cast<std::uint64_t>(j)) % 2 == 0;
            if (i_even != j_even && std::abs(rho(i, j)) >= kSsrTolerance) {
                Occupation a(n, static_cast<std::uint64_t>(i)), b(n, static_cast<std::uint64_t>(j));
                return SsrVerdict::violation("mixes even and odd sectors (coherence between |" + a.to_string() +
                                             "> and |" + b.to_string() + ">)");
            }
        }
    }
    return SsrVerdict::ok();
}

bool ssr_separable_two_modes(const DensityMatrix &rho) {
    if (rho.num_modes() != 2) {
        throw Error("ssr_separable_two_modes needs exactly 2 modes, got " + std::to_string(rho.num_modes()));
    }
    for (Eigen::Index i = 0; i < 4; i++) {
        for (Eigen::Index j = 0; j < 4; j++) {
            if (i != j && std::abs(rho(i, j)) >= kSsrTolerance) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace fermiqi
