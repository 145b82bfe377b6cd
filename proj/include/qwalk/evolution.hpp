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

#ifndef QWALK_EVOLUTION_HPP
#define QWALK_EVOLUTION_HPP

#include <optional>
#include <vector>

#include "qwalk/operators.hpp"

namespace qwalk {

/// Applies U `steps` times, one matrix-vector product per step.
WalkState evolve(const WalkState &state, std::size_t steps, const UnitaryOperator &u);

/// Same evolution through the amplitude recurrence
///
///     alpha'_x = (C psi_{x-1})_up,   beta'_x = (C psi_{x+1})_down
///
/// with the outflow at a line's end re-entering as the opposite coin
/// component at the same site. Spatial convention only.
WalkState evolve_map(const WalkState &state, std::size_t steps, const CoinParameters &coin);

/// |alpha_x|^2 + |beta_x|^2.
double site_probability(const WalkState &state, std::size_t site);

/// |<target_coin, target_site | state>|.
double fidelity(const WalkState &state, const CoinState &target_coin, std::size_t target_site);

/// The 2x2 block of U^t taking coin amplitudes at `source` to coin amplitudes at `target`.
struct TransferBlock {
    std::size_t t;
    std::size_t source;
    std::size_t target;
    Matrix2 block;
    double residual;  // max|block^dagger block - I|

    bool perfect(double tolerance = kTransferTolerance) const { return residual < tolerance; }
};

TransferBlock transfer_block(const UnitaryOperator &u, std::size_t t, std::size_t source, std::size_t target);

/// Block extraction from an already computed power of U.
TransferBlock block_of(const Matrix &u_power, const Lattice &lattice, std::size_t t, std::size_t source,
                       std::size_t target);

struct PeriodicityResult {
    std::size_t period;
    double phase;
    int n_period = 1;
};

/// True when m = c I entrywise within tolerance for some |c| = 1.
bool proportional_to_identity(const Matrix &m, double tolerance, double *phase = nullptr);

/// Smallest t <= horizon with U^t proportional to the identity.
std::optional<PeriodicityResult> detect_periodicity(const UnitaryOperator &u, std::size_t horizon);

/// Number of distinct sites where a composite step localizes the walker with
/// probability 1 (for every coin state) before it first comes back to
/// `start_site` with its coin state unchanged. Empty if the horizon runs out.
std::optional<int> n_periodicity(const UnitaryOperator &u_composite, std::size_t start_site, std::size_t horizon);

/// P_{t,site} for t = 0..horizon.
std::vector<double> probability_series(const WalkState &initial, const UnitaryOperator &u, std::size_t site,
                                       std::size_t horizon);

}  // namespace qwalk

#endif
