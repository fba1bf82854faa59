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

#include "fermiqi/fock.hpp"

#include <bit>
#include <cmath>

#include "fermiqi/error.hpp"

namespace fermiqi {

namespace {

// Inversion count by merge sort; `scratch` must have the same size as `values`.
std::size_t count_inversions(std::span<std::size_t> values, std::span<std::size_t> scratch) {
    if (values.size() < 2) {
        return 0;
    }
    std::size_t mid = values.size() / 2;
    std::size_t inversions = count_inversions(values.first(mid), scratch.first(mid)) +
                             count_inversions(values.subspan(mid), scratch.subspan(mid));
    std::size_t i = 0, j = mid, k = 0;
    while (i < mid && j < values.size()) {
        if (values[j] < values[i]) {
            inversions += mid - i;
            scratch[k++] = values[j++];
        } else {
            scratch[k++] = values[i++];
        }
    }
    while (i < mid) {
        scratch[k++] = values[i++];
    }
    while (j < values.size()) {
        scratch[k++] = values[j++];
    }
    std::copy(scratch.begin(), scratch.begin() + k, values.begin());
    return inversions;
}

void require_same_order(const FockVector &x, const FockVector &y, const char *what) {
    if (x.order() != y.order()) {
        throw Error(std::string(what) + ": mode orders differ ([" + x.order().to_string() + "] vs [" +
                    y.order().to_string() + "]); reorder one of the states first");
    }
}

FockVector combine(const FockVector &x, const FockVector &y, Complex y_scale) {
    require_same_order(x, y, "linear combination");
    std::vector<std::pair<Occupation, Complex>> terms(x.terms().begin(), x.terms().end());
    for (const auto &[state, amp] : y.terms()) {
        terms.emplace_back(state, y_scale * amp);
    }
    return FockVector(x.order(), terms);
}

// Applies a single ladder operator; `create` selects a† vs a.
FockVector apply_ladder(const FockVector &state, std::string_view mode, bool create) {
    std::size_t position = state.order().index_of(mode);
    std::vector<std::pair<Occupation, Complex>> out;
    for (const auto &[occ, amp] : state.terms()) {
        if (occ.occupied(position) == create) {
            continue;
        }
        double sign = occ.count_before(position) % 2 ? -1.0 : 1.0;
        out.emplace_back(occ.with(position, create), sign * amp);
    }
    return FockVector(state.order(), out);
}

}  // namespace

Occupation::Occupation(std::size_t num_modes, std::uint64_t index) : num_modes_(num_modes), index_(index) {
    if (num_modes > kMaxModes) {
        throw Error("at most " + std::to_string(kMaxModes) + " modes are supported");
    }
    if (num_modes < 64 && (index >> num_modes) != 0) {
        throw Error("occupation index out of range for " + std::to_string(num_modes) + " modes");
    }
}

Occupation Occupation::from_string(std::string_view bits) {
    if (bits.size() > kMaxModes) {
        throw Error("occupation string too long");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error("occupation string may only contain 0 and 1, got '" + std::string(bits) + "'");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return Occupation(bits.size(), index);
}

Occupation Occupation::with(std::size_t position, bool value) const {
    std::uint64_t mask = std::uint64_t{1} << (num_modes_ - 1 - position);
    return Occupation(num_modes_, value ? (index_ | mask) : (index_ & ~mask));
}

int Occupation::count() const {
    return std::popcount(index_);
}

int Occupation::count_before(std::size_t position) const {
    // Bits of positions < position are the high bits above bit (n-1-position).
    return std::popcount(index_ >> (num_modes_ - position));
}

int Occupation::count_after(std::size_t position) const {
    std::uint64_t below = (std::uint64_t{1} << (num_modes_ - 1 - position)) - 1;
    return std::popcount(index_ & below);
}

std::string Occupation::to_string() const {
    std::string out(num_modes_, '0');
    for (std::size_t k = 0; k < num_modes_; k++) {
        if (occupied(k)) {
            out[k] = '1';
        }
    }
    return out;
}

std::string_view to_string(Parity parity) {
    switch (parity) {
        case Parity::Even:
            return "even";
        case Parity::Odd:
            return "odd";
        case Parity::Mixed:
            return "mixed";
    }
    return "?";
}

FockVector::FockVector(ModeOrder order) : order_(std::move(order)) {
}

FockVector::FockVector(ModeOrder order, std::span<const std::pair<Occupation, Complex>> terms)
    : order_(std::move(order)) {
    for (const auto &[state, amp] : terms) {
        if (state.num_modes() != order_.size()) {
            throw Error("occupation |" + state.to_string() + "> does not match " + std::to_string(order_.size()) +
                        " modes");
        }
        terms_[state] += amp;
    }
    std::erase_if(terms_, [](const auto &kv) { return std::abs(kv.second) < kStorageEpsilon; });
}

FockVector::FockVector(ModeOrder order, std::initializer_list<std::pair<std::string_view, Complex>> terms)
    : FockVector(std::move(order)) {
    std::vector<std::pair<Occupation, Complex>> parsed;
    for (const auto &[bits, amp] : terms) {
        parsed.emplace_back(Occupation::from_string(bits), amp);
    }
    *this = FockVector(order_, parsed);
}

FockVector FockVector::vacuum(ModeOrder order) {
    std::size_t n = order.size();
    std::pair<Occupation, Complex> term{Occupation(n, 0), 1.0};
    return FockVector(std::move(order), std::span(&term, 1));
}

FockVector FockVector::basis(ModeOrder order, std::string_view bits) {
    std::pair<Occupation, Complex> term{Occupation::from_string(bits), 1.0};
    return FockVector(std::move(order), std::span(&term, 1));
}

FockVector FockVector::from_dense(ModeOrder order, const Eigen::VectorXcd &amplitudes) {
    std::size_t n = order.size();
    if (amplitudes.size() != (Eigen::Index{1} << n)) {
        throw Error("dense vector has the wrong dimension for " + std::to_string(n) + " modes");
    }
    std::vector<std::pair<Occupation, Complex>> terms;
    for (Eigen::Index i = 0; i < amplitudes.size(); i++) {
        terms.emplace_back(Occupation(n, static_cast<std::uint64_t>(i)), amplitudes[i]);
    }
    return FockVector(std::move(order), terms);
}

Complex FockVector::amplitude(const Occupation &state) const {
    auto it = terms_.find(state);
    return it == terms_.end() ? Complex{} : it->second;
}

double FockVector::norm_squared() const {
    double total = 0;
    for (const auto &kv : terms_) {
        total += std::norm(kv.second);
    }
    return total;
}

FockVector FockVector::normalized() const {
    double norm = std::sqrt(norm_squared());
    if (norm == 0) {
        throw Error("cannot normalize the zero vector");
    }
    return Complex(1.0 / norm) * *this;
}

Eigen::VectorXcd FockVector::to_dense() const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(Eigen::Index{1} << order_.size());
    for (const auto &[state, amp] : terms_) {
        out[static_cast<Eigen::Index>(state.index())] = amp;
    }
    return out;
}

FockVector operator+(const FockVector &x, const FockVector &y) {
    return combine(x, y, 1.0);
}

FockVector operator-(const FockVector &x, const FockVector &y) {
    return combine(x, y, -1.0);
}

FockVector operator*(Complex scale, const FockVector &x) {
    std::vector<std::pair<Occupation, Complex>> terms;
    for (const auto &[state, amp] : x.terms()) {
        terms.emplace_back(state, scale * amp);
    }
    return FockVector(x.order(), terms);
}

FockVector apply_creation(const FockVector &state, std::string_view mode) {
    return apply_ladder(state, mode, true);
}

FockVector apply_annihilation(const FockVector &state, std::string_view mode) {
    return apply_ladder(state, mode, false);
}

int reorder_sign(const Occupation &state, std::span<const std::size_t> source_positions) {
    // New positions of the occupied source modes, listed in source order; each
    // inversion is one exchange of two occupied (odd) modes.
    std::size_t n = source_positions.size();
    std::vector<std::size_t> new_position_of(n);
    for (std::size_t k = 0; k < n; k++) {
        new_position_of[source_positions[k]] = k;
    }
    std::vector<std::size_t> sequence;
    for (std::size_t j = 0; j < n; j++) {
        if (state.occupied(j)) {
            sequence.push_back(new_position_of[j]);
        }
    }
    std::vector<std::size_t> scratch(sequence.size());
    return count_inversions(sequence, scratch) % 2 ? -1 : 1;
}

Occupation permute_bits(const Occupation &state, std::span<const std::size_t> source_positions) {
    std::size_t n = source_positions.size();
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < n; k++) {
        index = (index << 1) | static_cast<std::uint64_t>(state.occupied(source_positions[k]));
    }
    return Occupation(n, index);
}

FockVector reorder_modes(const FockVector &state, const ModeOrder &new_order) {
    auto source_positions = new_order.positions_in(state.order());
    std::vector<std::pair<Occupation, Complex>> out;
    out.reserve(state.terms().size());
    for (const auto &[occ, amp] : state.terms()) {
        double sign = reorder_sign(occ, source_positions);
        out.emplace_back(permute_bits(occ, source_positions), sign * amp);
    }
    return FockVector(new_order, out);
}

FockVector canonicalize(const FockVector &state) {
    return reorder_modes(state, state.order().canonical());
}

std::vector<BraTerm> braided_adjoint_signs(const FockVector &state) {
    std::vector<BraTerm> out;
    out.reserve(state.terms().size());
    for (const auto &[occ, amp] : state.terms()) {
        int k = occ.count();
        double sign = (k * (k - 1) / 2) % 2 ? -1.0 : 1.0;
        out.push_back({occ, sign * std::conj(amp)});
    }
    return out;
}

Complex braided_pairing(std::span<const BraTerm> bra, const FockVector &ket) {
    const ModeOrder &order = ket.order();
    Complex total = 0;
    for (const auto &term : bra) {
        if (term.state.num_modes() != order.size()) {
            throw Error("bra term does not match the ket's mode count");
        }
        // a_{i1} a_{i2} ... a_{ik} |ket>: the rightmost operator acts first.
        FockVector v = ket;
        for (std::size_t p = order.size(); p-- > 0;) {
            if (term.state.occupied(p)) {
                v = apply_annihilation(v, order[p]);
            }
        }
        total += term.coefficient * v.amplitude(Occupation(order.size(), 0));
    }
    return total;
}

Complex inner_product(const FockVector &x, const FockVector &y) {
    require_same_order(x, y, "inner_product");
    Complex total = 0;
    for (const auto &[state, amp] : x.terms()) {
        total += std::conj(amp) * y.amplitude(state);
    }
    return total;
}

Parity parity_of(const FockVector &state) {
    if (state.is_zero()) {
        throw Error("the zero vector has no parity");
    }
    bool has_even = false, has_odd = false;
    for (const auto &kv : state.terms()) {
        (kv.first.even() ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) {
        return Parity::Mixed;
    }
    return has_even ? Parity::Even : Parity::Odd;
}

SsrVerdict ssr_check_pure(const FockVector &state) {
    if (state.is_zero() || parity_of(state) != Parity::Mixed) {
        return SsrVerdict::ok();
    }
    const Occupation *even = nullptr;
    const Occupation *odd = nullptr;
    for (const auto &kv : state.terms()) {
        auto &slot = kv.first.even() ? even : odd;
        if (!slot) {
            slot = &kv.first;
        }
    }
    return SsrVerdict::violation("mixes even and odd sectors (|" + even->to_string() + "> even, |" +
                                 odd->to_string() + "> odd)");
}

}  // namespace fermiqi
