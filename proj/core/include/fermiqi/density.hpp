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

#ifndef FERMIQI_DENSITY_HPP
#define FERMIQI_DENSITY_HPP

#include <span>
#include <string>

#include <Eigen/Dense>

#include "fermiqi/fock.hpp"
#include "fermiqi/linalg.hpp"
#include "fermiqi/mode_order.hpp"

namespace fermiqi {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;
inline constexpr double kNormalizationTolerance = 1e-10;
/// Cross-sector coherences at or above this magnitude break the parity rule.
inline constexpr double kSsrTolerance = 1e-12;

/// Hermitian, unit-trace, positive matrix over the occupation basis of a ModeOrder.
/// Row/column i is the occupation with Occupation::index() == i.
class DensityMatrix {
   public:
    /// Validates Hermiticity, trace and positivity; throws fermiqi::Error otherwise.
    DensityMatrix(ModeOrder order, Eigen::MatrixXcd matrix);

    /// Skips validation. For results of operations that preserve the invariants.
    static DensityMatrix trusted(ModeOrder order, Eigen::MatrixXcd matrix);

    const ModeOrder &order() const {
        return order_;
    }
    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }
    Eigen::Index dimension() const {
        return matrix_.rows();
    }
    std::size_t num_modes() const {
        return order_.size();
    }
    Complex operator()(Eigen::Index row, Eigen::Index col) const {
        return matrix_(row, col);
    }

   private:
    struct Trusted {};
    DensityMatrix(ModeOrder order, Eigen::MatrixXcd matrix, Trusted);

    ModeOrder order_;
    Eigen::MatrixXcd matrix_;
};

/// |state><state|. Throws unless the state is normalized within 1e-10.
DensityMatrix outer(const FockVector &state);

/// Re-expresses rho in a permuted mode order; each ket/bra picks up its braiding sign.
DensityMatrix reorder_modes(const DensityMatrix &rho, const ModeOrder &new_order);

/// Fermionic partial trace over `traced`.
///
/// The traced modes are braided behind the survivors and then discarded with the
/// ordinary trace over trailing tensor factors. Survivors keep their relative order.
/// Tracing every mode yields the 1x1 matrix [tr rho] over ModeOrder::none().
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::string> traced);

/// Transposes the occupation indices of `subsystem` (no braiding signs). An empty
/// subsystem returns a copy and the full set returns the full transpose; both
/// cases print a warning to std::clog.
Eigen::MatrixXcd partial_transpose(const DensityMatrix &rho, std::span<const std::string> subsystem);

Spectrum spectrum(const DensityMatrix &rho);
Spectrum spectrum(const Eigen::MatrixXcd &m);

/// Valid iff no element connecting an even and an odd occupation reaches 1e-12.
SsrVerdict ssr_check_mixed(const DensityMatrix &rho);

/// Two-mode separability under the parity rule: every off-diagonal element below
/// 1e-12. Throws unless rho has exactly two modes.
bool ssr_separable_two_modes(const DensityMatrix &rho);

}  // namespace fermiqi

#endif
