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

#include "fermiqi/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "fermiqi/error.hpp"

namespace fermiqi {

namespace {

double xlog2x(double x) {
    return x <= 0 ? 0.0 : x * std::log2(x);
}

double sum_negative(const Spectrum &s) {
    double total = 0;
    for (double v : s.eigenvalues) {
        if (v < 0) {
            total -= v;
        }
    }
    return total;
}

void require_two_modes(const DensityMatrix &rho, const char *what) {
    if (rho.num_modes() != 2) {
        throw Error(std::string(what) + " needs a two-mode density matrix, got " + std::to_string(rho.num_modes()) +
                    " modes");
    }
}

}  // namespace

double binary_entropy(double x) {
    return -xlog2x(x) - xlog2x(1.0 - x);
}

double von_neumann_entropy(const Spectrum &spectrum) {
    double total = 0;
    for (double v : spectrum.eigenvalues) {
        if (v < -kPositivityTolerance) {
            std::ostringstream msg;
            msg << "von_neumann_entropy: negative eigenvalue " << v;
            throw Error(msg.str());
        }
        total -= xlog2x(v);
    }
    return total;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return von_neumann_entropy(spectrum(rho));
}

double weighted_pure_state_entropy(const Eigen::Vector4cd &psi) {
    // Reduced operator on the first mode: sigma = M M^dagger with M(a, b) = psi[2a + b].
    double s00 = std::norm(psi[0]) + std::norm(psi[1]);
    double s11 = std::norm(psi[2]) + std::norm(psi[3]);
    Complex s01 = psi[0] * std::conj(psi[2]) + psi[1] * std::conj(psi[3]);
    double p = s00 + s11;
    if (p <= 0) {
        return 0;
    }
    double half_gap = std::hypot(0.5 * (s00 - s11), std::abs(s01));
    double hi = 0.5 * p + half_gap;
    double lo = std::norm(psi[0] * psi[3] - psi[1] * psi[2]) / hi;
    return xlog2x(p) - xlog2x(hi) - xlog2x(lo);
}

double negativity(const DensityMatrix &rho, std::span<const std::string> subsystem) {
    return sum_negative(hermitian_spectrum(partial_transpose(rho, subsystem)));
}

double negativity(const Eigen::MatrixXcd &m, BipartiteDims dims, Side side) {
    return sum_negative(hermitian_spectrum(partial_transpose(m, dims, side)));
}

double log_negativity(const DensityMatrix &rho, std::span<const std::string> subsystem) {
    return std::log2(1.0 + 2.0 * negativity(rho, subsystem));
}

double log_negativity(const Eigen::MatrixXcd &m, BipartiteDims dims, Side side) {
    return std::log2(1.0 + 2.0 * negativity(m, dims, side));
}

double concurrence_two_qubit(const Eigen::MatrixXcd &rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw Error("concurrence_two_qubit needs a 4x4 matrix");
    }
    // With rho = W W^dagger, the Wootters lambdas are the singular values of
    // tau = W^T (sigma_y x sigma_y) W. Dropping numerically null eigenvectors keeps
    // the small lambdas from inheriting sqrt(machine epsilon) noise.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (rho + rho.adjoint()));
    const auto &mu = eig.eigenvalues();
    double cutoff = 1e-14 * std::max(1.0, mu.maxCoeff());
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = 0; i < 4; i++) {
        if (mu[i] > cutoff) {
            kept.push_back(i);
        }
    }
    if (kept.empty()) {
        return 0;
    }
    Eigen::MatrixXcd w(4, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); c++) {
        w.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(kept[c]) * std::sqrt(mu[kept[c]]);
    }
    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
    flip(0, 3) = flip(3, 0) = -1.0;
    flip(1, 2) = flip(2, 1) = 1.0;
    Eigen::MatrixXcd tau = w.transpose() * flip * w;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tau);
    std::vector<double> lambda(svd.singularValues().begin(), svd.singularValues().end());
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    double c = lambda[0];
    for (std::size_t i = 1; i < lambda.size(); i++) {
        c -= lambda[i];
    }
    return std::max(0.0, c);
}

double concurrence_two_qubit(const DensityMatrix &rho) {
    require_two_modes(rho, "concurrence_two_qubit");
    return concurrence_two_qubit(rho.matrix());
}

double eof_from_concurrence(double concurrence) {
    double c = std::clamp(concurrence, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt((1.0 - c) * (1.0 + c))));
}

double eof_wootters(const Eigen::MatrixXcd &rho) {
    return eof_from_concurrence(concurrence_two_qubit(rho));
}

double eof_wootters(const DensityMatrix &rho) {
    require_two_modes(rho, "eof_wootters");
    return eof_wootters(rho.matrix());
}

}  // namespace fermiqi
