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

#ifndef FERMIQI_LINALG_HPP
#define FERMIQI_LINALG_HPP

#include <vector>

#include <Eigen/Dense>

namespace fermiqi {

/// Real eigenvalues, sorted in descending order.
struct Spectrum {
    std::vector<double> eigenvalues;

    double sum() const;
    double min() const;
    double max() const;
    std::size_t size() const {
        return eigenvalues.size();
    }
};

/// Largest |m(i,j) - conj(m(j,i))|.
double max_hermitian_deviation(const Eigen::MatrixXcd &m);

/// Eigenvalues of a Hermitian matrix. Throws fermiqi::Error if the input is not
/// square or deviates from Hermitian by more than `tolerance`.
Spectrum hermitian_spectrum(const Eigen::MatrixXcd &m, double tolerance = 1e-10);

/// Dimensions of a bipartite index space; row index = i_first * second + i_second.
struct BipartiteDims {
    Eigen::Index first;
    Eigen::Index second;
};

enum class Side { First, Second };

/// Transposes the indices of one tensor factor. Throws on a dimension mismatch.
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd &m, BipartiteDims dims, Side side);

}  // namespace fermiqi

#endif
