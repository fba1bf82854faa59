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

#include "fermiqi/channels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fermiqi/error.hpp"

namespace fermiqi {

namespace {

void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream msg;
        msg << "erasure probability must lie in [0, 1], got " << p;
        throw Error(msg.str());
    }
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Eigen::MatrixXcd> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw Error("a channel needs at least one Kraus operator");
    }
    for (const auto &k : kraus_) {
        if (k.rows() != output_dim() || k.cols() != input_dim()) {
            throw Error("Kraus operators have inconsistent shapes");
        }
    }
    double defect = completeness_defect();
    if (defect > kCompletenessTolerance) {
        std::ostringstream msg;
        msg << "Kraus operators are not trace preserving (defect " << defect << ")";
        throw Error(msg.str());
    }
}

double KrausChannel::completeness_defect() const {
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(input_dim(), input_dim());
    for (const auto &k : kraus_) {
        total += k.adjoint() * k;
    }
    total -= Eigen::MatrixXcd::Identity(input_dim(), input_dim());
    return total.cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd apply_channel(const KrausChannel &channel, const Eigen::MatrixXcd &rho) {
    if (rho.rows() != channel.input_dim() || rho.cols() != channel.input_dim()) {
        throw Error("apply_channel: input is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                    ", channel expects " + std::to_string(channel.input_dim()) + "x" +
                    std::to_string(channel.input_dim()));
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(channel.output_dim(), channel.output_dim());
    for (const auto &k : channel.operators()) {
        out += k * rho * k.adjoint();
    }
    return out;
}

Eigen::MatrixXcd choi_state(const KrausChannel &channel) {
    const Eigen::Index din = channel.input_dim();
    const Eigen::Index dout = channel.output_dim();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(din * dout, din * dout);
    // |Psi><Psi| = (1/d) sum_{ij} |i><j| x |i><j|; the channel acts on the second factor.
    for (Eigen::Index i = 0; i < din; i++) {
        for (Eigen::Index j = 0; j < din; j++) {
            Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(din, din);
            unit(i, j) = 1.0;
            out.block(i * dout, j * dout, dout, dout) = apply_channel(channel, unit) / static_cast<double>(din);
        }
    }
    return out;
}

KrausChannel erasure_channel(double p) {
    require_probability(p);
    Eigen::MatrixXcd keep = Eigen::MatrixXcd::Zero(3, 2);
    keep(0, 0) = keep(1, 1) = std::sqrt(1.0 - p);
    Eigen::MatrixXcd erase_one = Eigen::MatrixXcd::Zero(3, 2);
    erase_one(2, 1) = std::sqrt(p);
    Eigen::MatrixXcd erase_zero = Eigen::MatrixXcd::Zero(3, 2);
    erase_zero(2, 0) = std::sqrt(p);
    return KrausChannel({keep, erase_one, erase_zero});
}

ChoiState erasure_choi(double p) {
    return {choi_state(erasure_channel(p)), {2, 3}};
}

Spectrum erasure_ppt_spectrum(double p) {
    ChoiState choi = erasure_choi(p);
    return hermitian_spectrum(partial_transpose(choi.matrix, choi.dims, Side::Second));
}

double erasure_quantum_capacity(double p) {
    require_probability(p);
    return std::max(0.0, 1.0 - 2.0 * p);
}

DensityMatrix grassmann_output_state(double r) {
    if (!(r >= 0.0 && r <= std::numbers::pi / 4)) {
        std::ostringstream msg;
        msg << "acceleration parameter must lie in [0, pi/4], got " << r;
        throw Error(msg.str());
    }
    const double c = std::cos(r), s = std::sin(r);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = 0.5 * c * c;
    m(0, 3) = m(3, 0) = 0.5 * c;
    m(1, 1) = 0.5 * s * s;
    m(3, 3) = 0.5;
    return DensityMatrix(ModeOrder({"a", "b"}), std::move(m));
}

}  // namespace fermiqi
