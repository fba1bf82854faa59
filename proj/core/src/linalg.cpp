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

#include "fermiqi/linalg.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "fermiqi/error.hpp"

namespace fermiqi {

double Spectrum::sum() const {
    double total = 0;
    for (double v : eigenvalues) {
        total += v;
    }
    return total;
}

double Spectrum::min() const {
    return eigenvalues.empty() ? 0.0 : eigenvalues.back();
}

double Spectrum::max() const {
    return eigenvalues.empty() ? 0.0 : eigenvalues.front();
}

double max_hermitian_deviation(const Eigen::MatrixXcd &m) {
    if (m.rows() != m.cols()) {
        throw Error("matrix is not square");
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Spectrum hermitian_spectrum(const Eigen::MatrixXcd &m, double tolerance) {
    if (m.rows() != m.cols()) {
        throw Error("spectrum: matrix is not square (" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    ")");
    }
    if (m.size() == 0) {
        return {};
    }
    double deviation = max_hermitian_deviation(m);
    if (deviation > tolerance) {
        throw Error("spectrum: matrix is not Hermitian (deviation " + std::to_string(deviation) + ")");
    }
    Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("spectrum: eigensolver failed");
    }
    Spectrum out;
    out.eigenvalues.assign(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
    return out;
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd &m, BipartiteDims dims, Side side) {
    const Eigen::Index d1 = dims.first, d2 = dims.second;
    if (m.rows() != d1 * d2 || m.cols() != d1 * d2) {
        throw Error("partial_transpose: matrix is not " + std::to_string(d1 * d2) + "x" + std::to_string(d1 * d2));
    }
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (Eigen::Index i1 = 0; i1 < d1; i1++) {
        for (Eigen::Index i2 = 0; i2 < d2; i2++) {
            for (Eigen::Index j1 = 0; j1 < d1; j1++) {
                for (Eigen::Index j2 = 0; j2 < d2; j2++) {
                    Eigen::Index src_row, src_col;
                    if (side == Side::First) {
                        src_row = j1 * d2 + i2;
                        src_col = i1 * d2 + j2;
                    } else {
                        src_row = i1 * d2 + j2;
                        src_col = j1 * d2 + i2;
                    }
                    out(i1 * d2 + i2, j1 * d2 + j2) = m(src_row, src_col);
                }
            }
        }
    }
    return out;
}

}  // namespace fermiqi
