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

#ifndef FERMIQI_CHANNELS_HPP
#define FERMIQI_CHANNELS_HPP

#include <vector>

#include <Eigen/Dense>

#include "fermiqi/density.hpp"
#include "fermiqi/linalg.hpp"

namespace fermiqi {

inline constexpr double kCompletenessTolerance = 1e-12;

/// Completely positive trace-preserving map in Kraus form. Every operator is
/// output_dim x input_dim and sum K^dagger K equals the identity.
class KrausChannel {
   public:
    /// Throws fermiqi::Error on an empty list, inconsistent shapes, or a
    /// completeness defect above 1e-12.
    explicit KrausChannel(std::vector<Eigen::MatrixXcd> kraus);

    const std::vector<Eigen::MatrixXcd> &operators() const {
        return kraus_;
    }
    Eigen::Index input_dim() const {
        return kraus_.front().cols();
    }
    Eigen::Index output_dim() const {
        return kraus_.front().rows();
    }

    /// max |(sum K^dagger K - I)_{ij}|.
    double completeness_defect() const;

   private:
    std::vector<Eigen::MatrixXcd> kraus_;
};

/// sum_i K_i rho K_i^dagger. Throws on a shape mismatch.
Eigen::MatrixXcd apply_channel(const KrausChannel &channel, const Eigen::MatrixXcd &rho);

/// (id x N)(|Psi><Psi|) with |Psi> = sum_i |ii> / sqrt(d_in). Index = reference * d_out + output.
Eigen::MatrixXcd choi_state(const KrausChannel &channel);

/// Qubit erasure channel into C^3: N(rho) = (1-p) rho + p |e><e|, flag |e> = |2>.
/// Throws unless 0 <= p <= 1.
KrausChannel erasure_channel(double p);

struct ChoiState {
    Eigen::MatrixXcd matrix;
    /// Reference qubit first, channel output second.
    BipartiteDims dims;
};

ChoiState erasure_choi(double p);

/// Spectrum of the Choi state transposed on the channel output.
Spectrum erasure_ppt_spectrum(double p);

/// Quantum capacity of the qubit erasure channel, max(0, 1 - 2p) qubits per use.
/// This is the known closed form for the erasure channel; it is positive exactly
/// when p < 1/2.
double erasure_quantum_capacity(double p);

/// The two-mode output state of an accelerated observer,
///   1/2 [[cos^2 r, 0, 0, cos r], [0, sin^2 r, 0, 0], [0, 0, 0, 0], [cos r, 0, 0, 1]]
/// over modes (a, b), r in [0, pi/4]. Throws outside that range.
DensityMatrix grassmann_output_state(double r);

}  // namespace fermiqi

#endif
