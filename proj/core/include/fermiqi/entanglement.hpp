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

#ifndef FERMIQI_ENTANGLEMENT_HPP
#define FERMIQI_ENTANGLEMENT_HPP

#include <span>
#include <string>

#include <Eigen/Dense>

#include "fermiqi/density.hpp"
#include "fermiqi/linalg.hpp"

namespace fermiqi {

/// A named entanglement value plus optimizer diagnostics (zero for closed forms).
struct EntanglementReport {
    std::string measure;
    double value = 0;
    int restarts = 0;
    /// Second-best minus best restart objective; 0 when fewer than two restarts ran.
    double best_gap = 0;
    /// Riemannian gradient norm at the reported optimum.
    double residual = 0;
    bool converged = true;
};

/// h(x) = -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// -sum lambda log2 lambda. Throws fermiqi::Error if an eigenvalue is below -1e-10.
double von_neumann_entropy(const Spectrum &spectrum);
double von_neumann_entropy(const DensityMatrix &rho);

/// Entropy (ebits) of the first-mode reduced state of an unnormalized two-mode
/// pure state, scaled by its squared norm. Amplitudes indexed |00>,|01>,|10>,|11>.
double weighted_pure_state_entropy(const Eigen::Vector4cd &amplitudes);

/// Sum of |negative eigenvalues| of the partial transpose.
double negativity(const DensityMatrix &rho, std::span<const std::string> subsystem);
double negativity(const Eigen::MatrixXcd &m, BipartiteDims dims, Side side);

/// log2(1 + 2 N).
double log_negativity(const DensityMatrix &rho, std::span<const std::string> subsystem);
double log_negativity(const Eigen::MatrixXcd &m, BipartiteDims dims, Side side);

/// Wootters spin-flip concurrence of a 4x4 density matrix. Throws on a wrong shape.
double concurrence_two_qubit(const Eigen::MatrixXcd &rho);
double concurrence_two_qubit(const DensityMatrix &rho);

/// h((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double concurrence);

double eof_wootters(const Eigen::MatrixXcd &rho);
double eof_wootters(const DensityMatrix &rho);

}  // namespace fermiqi

#endif
