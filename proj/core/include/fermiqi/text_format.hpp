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

#ifndef FERMIQI_TEXT_FORMAT_HPP
#define FERMIQI_TEXT_FORMAT_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "fermiqi/channels.hpp"
#include "fermiqi/density.hpp"
#include "fermiqi/entanglement.hpp"
#include "fermiqi/fock.hpp"

namespace fermiqi {

// State files:
//
//     # comment
//     modes: a b c
//     0.5 0 |100>
//     -0.5 0 |011>
//
// Density files: a `modes:` line, a line holding the dimension, then the matrix
// row-major as `re im` pairs (one row per line when written).
//
// Channel files: `kraus: <count>`, then per operator a `rows cols` line and its
// entries in the same row-major layout.
//
// All numbers are written with 17 significant digits (exact round trip) and no
// locale dependence. Parse failures throw ParseError with line and column.

/// Shortest-form-agnostic fixed-precision formatting, "C" locale, -0 printed as 0.
std::string format_number(double value, int significant_digits = 17);

FockVector parse_state(std::string_view text);
std::string write_state(const FockVector &state);

DensityMatrix parse_density(std::string_view text);
std::string write_density(const DensityMatrix &rho);

KrausChannel parse_channel(std::string_view text);
std::string write_channel(const KrausChannel &channel);

/// `measure=<name> value=<float> restarts=<int> residual=<float>`.
std::string format_report(const EntanglementReport &report);
EntanglementReport parse_report(std::string_view line);

/// Reads a whole file. Throws fermiqi::Error if it cannot be opened.
std::string read_file(const std::string &path);

}  // namespace fermiqi

#endif
