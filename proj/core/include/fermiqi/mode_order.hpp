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

#ifndef FERMIQI_MODE_ORDER_HPP
#define FERMIQI_MODE_ORDER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fermiqi {

/// An ordered list of distinct mode labels.
///
/// Every sign in the library is computed relative to a ModeOrder: the occupation
/// string |b0 b1 ...> denotes the product of creation operators of the occupied
/// modes, taken left to right in this order, applied to the vacuum.
class ModeOrder {
   public:
    /// Throws fermiqi::Error if labels is empty, contains duplicates, or contains
    /// an empty / whitespace-bearing label.
    explicit ModeOrder(std::vector<std::string> labels);

    /// The order with no modes. Only produced as the frame of a fully traced state.
    static ModeOrder none();

    /// Splits on commas and whitespace: "a b c", "a,b,c".
    static ModeOrder parse(std::string_view text);

    std::size_t size() const {
        return labels_.size();
    }
    bool empty() const {
        return labels_.empty();
    }
    const std::string &operator[](std::size_t position) const {
        return labels_[position];
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }

    std::optional<std::size_t> find(std::string_view label) const;
    /// Throws fermiqi::Error naming the label when it is not present.
    std::size_t index_of(std::string_view label) const;
    bool contains(std::string_view label) const {
        return find(label).has_value();
    }

    bool is_permutation_of(const ModeOrder &other) const;

    /// For each position k of *this, the position of the same label in `source`.
    /// Throws unless *this is a permutation of source.
    std::vector<std::size_t> positions_in(const ModeOrder &source) const;

    /// Lexicographic order over the labels; the reference frame for comparing states.
    ModeOrder canonical() const;

    /// Remaining labels in their current relative order. Unknown labels throw.
    ModeOrder without(std::span<const std::string> removed) const;

    /// Space separated labels.
    std::string to_string() const;

    bool operator==(const ModeOrder &other) const = default;

   private:
    ModeOrder() = default;
    std::vector<std::string> labels_;
};

/// Resolves a user-supplied label list against known modes.
///
/// Accepts comma/whitespace separated lists. A single token that is not itself a
/// label is split into characters when every known label is one character long,
/// so "acb" works for modes a, b, c.
std::vector<std::string> resolve_labels(std::string_view text, const ModeOrder &known);

}  // namespace fermiqi

#endif
