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

#ifndef FERMIQI_ROOF_HPP
#define FERMIQI_ROOF_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "fermiqi/density.hpp"
#include "fermiqi/entanglement.hpp"

namespace fermiqi {

enum class RoofConstraint {
    Unconstrained,
    /// Every pure state of the decomposition has definite fermion parity.
    ParitySSR,
};

struct RoofConfig {
    /// Pure states per decomposition; 0 selects 2 * rank.
    int decomposition_size = 0;
    int restarts = 32;
    std::uint64_t seed = 0;
    /// A restart stops after three consecutive steps that improve by less than this.
    double tolerance = 1e-9;
    int max_iterations = 3000;
    /// Worker threads for restarts; 0 uses the hardware concurrency. Results do not
    /// depend on this value.
    unsigned threads = 0;
};

struct RoofMember {
    double weight;
    /// Normalized two-mode state, indexed |00>,|01>,|10>,|11>.
    Eigen::Vector4cd state;
};

struct RoofDecomposition {
    std::vector<RoofMember> members;

    /// sum_i p_i |psi_i><psi_i|.
    Eigen::Matrix4cd reconstruct() const;
};

struct RoofResult {
    EntanglementReport report;
    RoofDecomposition decomposition;
};

/// Entanglement of formation by numerical convex-roof minimization.
///
/// Decompositions of size k are parametrized by k x rank isometries U acting on
/// the scaled eigenvectors of rho; the objective sum_i p_i S(tr_b psi_i) is
/// minimized on that Stiefel manifold by Riemannian conjugate gradients from
/// several seeded starting points. Rank-one inputs skip the search.
///
/// With RoofConstraint::ParitySSR, rho must pass ssr_check_mixed (else
/// SuperselectionError); the even and odd blocks are minimized separately and
/// their weighted values added.
///
/// Throws fermiqi::Error unless rho has exactly two modes.
RoofResult eof_convex_roof(const DensityMatrix &rho, RoofConstraint constraint, const RoofConfig &config = {});

}  // namespace fermiqi

#endif
