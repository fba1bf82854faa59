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

#include "fermiqi/mode_order.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "fermiqi/error.hpp"

namespace fermiqi {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

}  // namespace

ModeOrder::ModeOrder(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw Error("a mode order needs at least one mode");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto &label : labels_) {
        if (label.empty()) {
            throw Error("empty mode label");
        }
        for (char c : label) {
            if (c == ',' || c == '#' || std::isspace(static_cast<unsigned char>(c))) {
                throw Error("mode label '" + label + "' contains a reserved character");
            }
        }
        if (!seen.insert(label).second) {
            throw Error("duplicate mode label '" + label + "'");
        }
    }
}

ModeOrder ModeOrder::none() {
    return ModeOrder();
}

ModeOrder ModeOrder::parse(std::string_view text) {
    return ModeOrder(split_tokens(text));
}

std::optional<std::size_t> ModeOrder::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t ModeOrder::index_of(std::string_view label) const {
    if (auto k = find(label)) {
        return *k;
    }
    throw Error("unknown mode '" + std::string(label) + "' (modes: " + to_string() + ")");
}

bool ModeOrder::is_permutation_of(const ModeOrder &other) const {
    if (size() != other.size()) {
        return false;
    }
    auto a = labels_;
    auto b = other.labels_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<std::size_t> ModeOrder::positions_in(const ModeOrder &source) const {
    if (!is_permutation_of(source)) {
        throw Error("mode order [" + to_string() + "] is not a permutation of [" + source.to_string() + "]");
    }
    std::vector<std::size_t> out;
    out.reserve(size());
    for (const auto &label : labels_) {
        out.push_back(source.index_of(label));
    }
    return out;
}

ModeOrder ModeOrder::canonical() const {
    ModeOrder out = *this;
    std::sort(out.labels_.begin(), out.labels_.end());
    return out;
}

ModeOrder ModeOrder::without(std::span<const std::string> removed) const {
    for (const auto &label : removed) {
        index_of(label);
    }
    ModeOrder out;
    for (const auto &label : labels_) {
        if (std::find(removed.begin(), removed.end(), label) == removed.end()) {
            out.labels_.push_back(label);
        }
    }
    return out;
}

std::string ModeOrder::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < labels_.size(); k++) {
        if (k) {
            out.push_back(' ');
        }
        out += labels_[k];
    }
    return out;
}

std::vector<std::string> resolve_labels(std::string_view text, const ModeOrder &known) {
    auto tokens = split_tokens(text);
    if (tokens.size() == 1 && !known.contains(tokens[0])) {
        bool single_char = std::all_of(
            known.labels().begin(), known.labels().end(), [](const std::string &s) { return s.size() == 1; });
        if (single_char) {
            std::vector<std::string> chars;
            for (char c : tokens[0]) {
                chars.emplace_back(1, c);
            }
            tokens = std::move(chars);
        }
    }
    for (const auto &t : tokens) {
        known.index_of(t);
    }
    return tokens;
}

}  // namespace fermiqi
