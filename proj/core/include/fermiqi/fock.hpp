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

#ifndef FERMIQI_FOCK_HPP
#define FERMIQI_FOCK_HPP

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fermiqi/mode_order.hpp"

namespace fermiqi {

using Complex = std::complex<double>;

/// Amplitudes below this magnitude are dropped when a FockVector is built.
inline constexpr double kStorageEpsilon = 1e-14;

/// Largest number of modes an Occupation can address.
inline constexpr std::size_t kMaxModes = 62;

/// Occupation pattern of an ordered set of modes.
///
/// Position 0 is the most significant bit of index(), so sorting by index() is
/// the lexicographic order of the bit strings and index() is the row of the
/// basis state in dense vectors and matrices.
class Occupation {
   public:
    Occupation(std::size_t num_modes, std::uint64_t index);
    /// Parses a '0'/'1' string. Throws fermiqi::Error on other characters.
    static Occupation from_string(std::string_view bits);

    std::size_t num_modes() const {
        return num_modes_;
    }
    std::uint64_t index() const {
        return index_;
    }
    bool occupied(std::size_t position) const {
        return (index_ >> (num_modes_ - 1 - position)) & 1U;
    }
    Occupation with(std::size_t position, bool value) const;

    int count() const;
    /// Occupied modes strictly before / after `position`.
    int count_before(std::size_t position) const;
    int count_after(std::size_t position) const;
    bool even() const {
        return count() % 2 == 0;
    }

    std::string to_string() const;

    auto operator<=>(const Occupation &) const = default;

   private:
    std::size_t num_modes_;
    std::uint64_t index_;
};

enum class Parity { Even, Odd, Mixed };

std::string_view to_string(Parity parity);

/// Outcome of a superselection check.
struct SsrVerdict {
    bool valid = true;
    std::string reason;

    static SsrVerdict ok() {
        return {};
    }
    static SsrVerdict violation(std::string why) {
        return {false, std::move(why)};
    }
    explicit operator bool() const {
        return valid;
    }
};

/// A pure multi-mode fermionic state: complex amplitudes over occupation strings
/// of an explicit ModeOrder. Immutable once built.
class FockVector {
   public:
    using Terms = std::map<Occupation, Complex>;

    /// The zero vector.
    explicit FockVector(ModeOrder order);
    /// Duplicate occupations are summed; amplitudes below kStorageEpsilon dropped.
    FockVector(ModeOrder order, std::span<const std::pair<Occupation, Complex>> terms);
    /// Convenience: {{"100", 0.5}, {"011", -0.5}}.
    FockVector(ModeOrder order, std::initializer_list<std::pair<std::string_view, Complex>> terms);

    static FockVector vacuum(ModeOrder order);
    static FockVector basis(ModeOrder order, std::string_view bits);
    /// Dense amplitudes indexed by Occupation::index().
    static FockVector from_dense(ModeOrder order, const Eigen::VectorXcd &amplitudes);

    const ModeOrder &order() const {
        return order_;
    }
    const Terms &terms() const {
        return terms_;
    }
    std::size_t num_modes() const {
        return order_.size();
    }
    bool is_zero() const {
        return terms_.empty();
    }
    Complex amplitude(const Occupation &state) const;
    double norm_squared() const;
    FockVector normalized() const;
    Eigen::VectorXcd to_dense() const;

    friend FockVector operator+(const FockVector &x, const FockVector &y);
    friend FockVector operator-(const FockVector &x, const FockVector &y);
    friend FockVector operator*(Complex scale, const FockVector &x);

    /// Same order and bitwise identical amplitudes.
    bool operator==(const FockVector &other) const = default;

   private:
    ModeOrder order_;
    Terms terms_;
};

/// a†_mode |state>. Sign (-1)^(occupied modes before `mode`); occupied terms vanish.
FockVector apply_creation(const FockVector &state, std::string_view mode);

/// a_mode |state>. Same sign rule as apply_creation; empty terms vanish.
FockVector apply_annihilation(const FockVector &state, std::string_view mode);

/// Sign acquired by the occupation `state` (written in some source order) when the
/// modes are rearranged so that new position k holds source position
/// `source_positions[k]`. Equals (-1)^(inversions among occupied modes).
int reorder_sign(const Occupation &state, std::span<const std::size_t> source_positions);

/// Bits of `state` rearranged as described for reorder_sign, without the sign.
Occupation permute_bits(const Occupation &state, std::span<const std::size_t> source_positions);

/// The same physical state written in `new_order`. Throws unless new_order is a
/// permutation of state.order().
FockVector reorder_modes(const FockVector &state, const ModeOrder &new_order);

/// reorder_modes into the lexicographic label order.
FockVector canonicalize(const FockVector &state);

struct BraTerm {
    Occupation state;
    /// Coefficient of the annihilation monomial a_{i1} a_{i2} ... a_{ik}, modes in
    /// the ModeOrder, i.e. conj(amplitude) * (-1)^(k(k-1)/2).
    Complex coefficient;
};

/// Hermitian conjugate of `state` written as a combination of ordered annihilation
/// monomials acting to the left on <vac|.
std::vector<BraTerm> braided_adjoint_signs(const FockVector &state);

/// <vac| (sum of bra monomials) |ket>, evaluated by applying the annihilation
/// operators to the ket. Orders must match.
Complex braided_pairing(std::span<const BraTerm> bra, const FockVector &ket);

/// <x|y>. Throws when the mode orders differ.
Complex inner_product(const FockVector &x, const FockVector &y);

/// Throws fermiqi::Error for the zero vector.
Parity parity_of(const FockVector &state);

/// Valid iff the populated occupations all share one parity.
SsrVerdict ssr_check_pure(const FockVector &state);

}  // namespace fermiqi

#endif
