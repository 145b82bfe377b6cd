// Copyright 2026 The qwalk Authors
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

#ifndef QWALK_OPERATORS_HPP
#define QWALK_OPERATORS_HPP

#include <string>

#include "qwalk/core.hpp"

namespace qwalk {

using Matrix2 = Eigen::Matrix2cd;

/// A 2x2 unitary written as e^{i global_phase} * coin_matrix(params).
struct DecompositionResult {
    CoinParameters params;
    double global_phase;
};

/// Residual max|M^dagger M - I| above which a transfer block is not accepted as a
/// perfect transfer.
inline constexpr double kTransferTolerance = 1e-9;

Matrix2 coin_matrix(const CoinParameters &params);

/// C (x) I_N for an arbitrary 2x2 coin-space unitary.
UnitaryOperator coin_operator(const Matrix2 &coin, const Lattice &lattice);

/// The conditional shift. Spatial lines reflect at the ends with a coin flip,
/// spatial cycles wrap around. Under the local convention edges (1,2), (3,4), ...
/// carry the label up and (2,3), (4,5), ... carry down; a walker follows the
/// incident edge that matches its coin and keeps its coin. A line's end site
/// has a self loop for the missing label.
UnitaryOperator shift_operator(const Lattice &lattice);

/// U = S (C (x) I).
UnitaryOperator step_operator(const CoinParameters &coin, const Lattice &lattice);

/// Inverse of coin_matrix up to a U(1) phase.
///
/// Gauge: the (0,0) entry of e^{-i gamma} m is real non-negative. When it vanishes
/// (rho = 0) gamma is zero and theta, phi are the anti-diagonal phases. When the
/// off-diagonals vanish (rho = 1) theta is zero and phi carries theta + phi.
DecompositionResult decompose_unitary2(const Matrix2 &m, double tolerance = 1e-10);

/// The coin operator that undoes a transfer block: decompose(m^dagger).
DecompositionResult recovery_from_transfer_block(const Matrix2 &block);

/// Families with a known analytic recovery operator.
enum class ClosedFormCase {
    two_line_biased,           // 2-line, rho in {1/4, 1/2}, theta = phi = 0
    identity_line,             // rho = 1 on any spatial line, t = N
    identity_cycle_even,       // rho = 1 on an even spatial cycle, t = N/2
    identity_cycle_odd,        // rho = 1 on an odd spatial cycle, t = N (back at site 1)
    flip_local_cycle_odd_half  // rho = 0, local convention, even cycle with N/2 odd, t = N/2
};

std::string to_string(ClosedFormCase c);
ClosedFormCase parse_closed_form_case(const std::string &s);

/// Number of walk steps after which the closed-form recovery applies.
std::size_t closed_form_transfer_time(ClosedFormCase c, const Lattice &lattice, const CoinParameters &coin);

/// Throws when the lattice or coin does not belong to the family.
CoinParameters closed_form_recovery(ClosedFormCase c, const Lattice &lattice, const CoinParameters &coin);

/// [1 - (-1)^N] / 2.
inline int parity_mu(std::size_t n) { return static_cast<int>(n % 2); }

/// min over gamma of max|e^{i gamma} a - b|, with gamma taken from arg tr(a^dagger b).
double distance_up_to_phase(const Matrix2 &a, const Matrix2 &b);

}  // namespace qwalk

#endif
