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

#include "fermiqi/roof.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "fermiqi/error.hpp"

namespace fermiqi {

namespace {

using Mat = Eigen::MatrixXcd;

// Rows of `factor` are sqrt(lambda_i) e_i^T, so factor^T conj(factor) = rho.
struct Factor {
    Mat rows;
};

double real_inner(const Mat &a, const Mat &b) {
    return (a.array().conjugate() * b.array()).real().sum();
}

// Objective in ebits and its Euclidean gradient G with df = Re<G, dU>.
struct Evaluation {
    double value;
    Mat gradient;
};

Evaluation evaluate(const Mat &u, const Factor &factor, bool with_gradient) {
    const Mat psi = u * factor.rows;
    const Eigen::Index k = psi.rows();
    Evaluation out{0.0, Mat()};
    Mat g_rows;
    if (with_gradient) {
        g_rows = Mat::Zero(k, 4);
    }
    for (Eigen::Index j = 0; j < k; j++) {
        Eigen::Vector4cd v = psi.row(j).transpose();
        out.value += weighted_pure_state_entropy(v);
        if (!with_gradient) {
            continue;
        }
        // d g = 2 Re <(ln p - ln sigma) M, dM> with sigma = M M^dagger.
        Eigen::Matrix2cd m;
        m << v[0], v[1], v[2], v[3];
        Eigen::Matrix2cd sigma = m * m.adjoint();
        double p = sigma.trace().real();
        if (p <= 0) {
            continue;
        }
        double s00 = sigma(0, 0).real(), s11 = sigma(1, 1).real();
        double half_gap = std::hypot(0.5 * (s00 - s11), std::abs(sigma(0, 1)));
        double hi = 0.5 * p + half_gap;
        double lo = std::norm(m.determinant()) / hi;
        Eigen::Matrix2cd gm;
        if (hi - lo <= 1e-12 * p) {
            gm = (std::log(p) - std::log(0.5 * (hi + lo))) * m;
        } else {
            Eigen::Matrix2cd proj_hi = (sigma - lo * Eigen::Matrix2cd::Identity()) / (hi - lo);
            if (lo <= 1e-30 * p) {
                gm = (std::log(p) - std::log(hi)) * (proj_hi * m);
            } else {
                gm = (std::log(p) - std::log(lo)) * m - (std::log(hi) - std::log(lo)) * (proj_hi * m);
            }
        }
        g_rows(j, 0) = gm(0, 0);
        g_rows(j, 1) = gm(0, 1);
        g_rows(j, 2) = gm(1, 0);
        g_rows(j, 3) = gm(1, 1);
    }
    if (with_gradient) {
        out.gradient = (2.0 / std::numbers::ln2) * (g_rows * factor.rows.adjoint());
    }
    return out;
}

// Projection onto the tangent space of the Stiefel manifold at u.
Mat tangent(const Mat &u, const Mat &z) {
    Mat uz = u.adjoint() * z;
    return z - u * (0.5 * (uz + uz.adjoint()));
}

Mat polar_factor(const Mat &x) {
    Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

struct RestartOutcome {
    double value = std::numeric_limits<double>::infinity();
    double residual = 0;
    bool converged = false;
    Mat u;
};

RestartOutcome minimize(Mat u, const Factor &factor, const RoofConfig &config) {
    Evaluation cur = evaluate(u, factor, true);
    Mat grad = tangent(u, cur.gradient);
    Mat dir = -grad;
    double step = 1.0;
    int stalls = 0;
    RestartOutcome out;
    for (int it = 0; it < config.max_iterations; it++) {
        double grad_norm2 = real_inner(grad, grad);
        if (grad_norm2 < 1e-26) {
            out.converged = true;
            break;
        }
        double slope = real_inner(grad, dir);
        if (slope >= 0) {
            dir = -grad;
            slope = -grad_norm2;
        }
        // Armijo backtracking along the polar retraction.
        double t = std::min(2.0 * step, 1e3);
        Mat next_u;
        double next_value = cur.value;
        bool accepted = false;
        while (t > 1e-18) {
            next_u = polar_factor(u + t * dir);
            next_value = evaluate(next_u, factor, false).value;
            if (next_value <= cur.value + 1e-4 * t * slope) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            out.converged = true;
            break;
        }
        step = t;
        Evaluation next = evaluate(next_u, factor, true);
        Mat next_grad = tangent(next_u, next.gradient);
        Mat moved_grad = tangent(next_u, grad);
        Mat moved_dir = tangent(next_u, dir);
        double beta = std::max(0.0, real_inner(next_grad, next_grad - moved_grad) / grad_norm2);
        double improvement = cur.value - next.value;
        u = std::move(next_u);
        cur = std::move(next);
        grad = std::move(next_grad);
        dir = -grad + beta * moved_dir;
        stalls = improvement < config.tolerance ? stalls + 1 : 0;
        if (stalls >= 3) {
            out.converged = true;
            break;
        }
    }
    out.value = cur.value;
    out.residual = std::sqrt(real_inner(grad, grad));
    out.u = std::move(u);
    return out;
}

Mat random_isometry(Eigen::Index k, Eigen::Index rank, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Mat x(k, rank);
    for (Eigen::Index i = 0; i < k; i++) {
        for (Eigen::Index j = 0; j < rank; j++) {
            // Two separate statements: argument evaluation order is unspecified.
            double re = normal(rng);
            double im = normal(rng);
            x(i, j) = Complex(re, im);
        }
    }
    return polar_factor(x);
}

struct BlockResult {
    EntanglementReport report;
    RoofDecomposition decomposition;
};

void append_members(RoofDecomposition &out, const Mat &psi) {
    for (Eigen::Index j = 0; j < psi.rows(); j++) {
        Eigen::Vector4cd v = psi.row(j).transpose();
        double weight = v.squaredNorm();
        if (weight > 0) {
            out.members.push_back({weight, v / std::sqrt(weight)});
        }
    }
}

// Convex roof of a positive (not necessarily unit-trace) 4x4 matrix whose
// eigenvectors are `vectors` with eigenvalues `values`.
BlockResult roof_of(const std::vector<double> &values, const std::vector<Eigen::Vector4cd> &vectors,
                    const RoofConfig &config) {
    BlockResult out;
    const auto rank = static_cast<Eigen::Index>(values.size());
    if (rank == 0) {
        return out;
    }
    Factor factor{Mat(rank, 4)};
    for (Eigen::Index i = 0; i < rank; i++) {
        factor.rows.row(i) = (std::sqrt(values[i]) * vectors[i]).transpose();
    }
    if (rank == 1) {
        out.report.value = weighted_pure_state_entropy(factor.rows.row(0).transpose());
        append_members(out.decomposition, factor.rows);
        return out;
    }

    const Eigen::Index k = config.decomposition_size > 0 ? config.decomposition_size : 2 * rank;
    if (k < rank) {
        throw Error("decomposition size " + std::to_string(k) + " is smaller than the rank " + std::to_string(rank));
    }
    const int restarts = std::max(1, config.restarts);
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int r = next++; r < restarts; r = next++) {
            std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                              static_cast<std::uint32_t>(r)};
            std::mt19937_64 rng(seq);
            Mat start;
            if (r == 0) {
                // The eigen-decomposition itself, padded with zero-weight members.
                start = Mat::Identity(k, rank);
            } else {
                start = random_isometry(k, rank, rng);
            }
            outcomes[static_cast<std::size_t>(r)] = minimize(std::move(start), factor, config);
        }
    };
    unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(restarts));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
    }

    // Best by value, ties broken by restart index.
    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); r++) {
        if (outcomes[r].value < outcomes[best].value) {
            best = r;
        }
    }
    double second = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < outcomes.size(); r++) {
        if (r != best) {
            second = std::min(second, outcomes[r].value);
        }
    }
    out.report.value = outcomes[best].value;
    out.report.restarts = restarts;
    out.report.best_gap = std::isfinite(second) ? second - outcomes[best].value : 0.0;
    out.report.residual = outcomes[best].residual;
    out.report.converged = outcomes[best].converged;
    append_members(out.decomposition, outcomes[best].u * factor.rows);
    return out;
}

// Eigenpairs of the principal submatrix on `indices`, embedded back into C^4 and
// filtered to the numerically positive part.
void block_eigenpairs(const Eigen::Matrix4cd &rho, const std::vector<int> &indices, std::vector<double> &values,
                      std::vector<Eigen::Vector4cd> &vectors) {
    const auto d = static_cast<Eigen::Index>(indices.size());
    Mat block(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            block(i, j) = rho(indices[i], indices[j]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (block + block.adjoint()));
    for (Eigen::Index c = d; c-- > 0;) {
        double value = eig.eigenvalues()[c];
        if (value <= 1e-12) {
            continue;
        }
        Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
        for (Eigen::Index i = 0; i < d; i++) {
            v[indices[i]] = eig.eigenvectors()(i, c);
        }
        values.push_back(value);
        vectors.push_back(v);
    }
}

void merge(BlockResult &total, const BlockResult &part) {
    total.report.value += part.report.value;
    total.report.restarts = std::max(total.report.restarts, part.report.restarts);
    total.report.best_gap = std::max(total.report.best_gap, part.report.best_gap);
    total.report.residual = std::max(total.report.residual, part.report.residual);
    total.report.converged = total.report.converged && part.report.converged;
    total.decomposition.members.insert(total.decomposition.members.end(), part.decomposition.members.begin(),
                                       part.decomposition.members.end());
}

}  // namespace

Eigen::Matrix4cd RoofDecomposition::reconstruct() const {
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (const auto &m : members) {
        out += m.weight * m.state * m.state.adjoint();
    }
    return out;
}

RoofResult eof_convex_roof(const DensityMatrix &rho, RoofConstraint constraint, const RoofConfig &config) {
    if (rho.num_modes() != 2) {
        throw Error("eof_convex_roof needs a two-mode density matrix, got " + std::to_string(rho.num_modes()) +
                    " modes");
    }
    const Eigen::Matrix4cd m = rho.matrix();
    BlockResult total;
    if (constraint == RoofConstraint::ParitySSR) {
        if (auto verdict = ssr_check_mixed(rho); !verdict) {
            throw SuperselectionError("eof_convex_roof with the parity constraint: " + verdict.reason);
        }
        for (const auto &sector : {std::vector<int>{0, 3}, std::vector<int>{1, 2}}) {
            std::vector<double> values;
            std::vector<Eigen::Vector4cd> vectors;
            block_eigenpairs(m, sector, values, vectors);
            merge(total, roof_of(values, vectors, config));
        }
        total.report.measure = "eof-roof-ssr";
    } else {
        std::vector<double> values;
        std::vector<Eigen::Vector4cd> vectors;
        block_eigenpairs(m, {0, 1, 2, 3}, values, vectors);
        merge(total, roof_of(values, vectors, config));
        total.report.measure = "eof-roof";
    }
    return {total.report, total.decomposition};
}

}  // namespace fermiqi
