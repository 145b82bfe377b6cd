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

#ifndef QWALK_PST_HPP
#define QWALK_PST_HPP

#include <optional>
#include <string>
#include <vector>

#include "qwalk/evolution.hpp"

namespace qwalk {

/// 8 x 8 grid over the Bloch sphere: theta_b = k pi / 7 (both poles included),
/// phi_b = 2 pi j / 8.
std::vector<CoinState> bloch_samples();

/// 50 N steps.
std::size_t default_horizon(const Lattice &lattice);

/// Outcome of a perfect-state-transfer search from site A to site B.
struct PSTReport {
    Lattice lattice;
    CoinParameters coin;
    std::size_t horizon;
    std::size_t source;
    std::size_t target;

    bool certified = false;
    std::optional<std::size_t> transfer_time = std::nullopt;
    Matrix2 block = Matrix2::Zero();
    /// At the transfer time if one was found, otherwise the smallest residual seen.
    double residual = 0.0;
    /// Step with the smallest residual when nothing was certified.
    std::size_t best_time = 0;
    std::optional<DecompositionResult> recovery = std::nullopt;
    /// Worst fidelity over the Bloch samples after walk + recovery.
    double min_recovered_fidelity = 0.0;
    /// Recoveries reconstructed from independent pairs of sampled states agree.
    bool recovery_unique = false;
    std::vector<std::size_t> later_transfer_times = {};
    std::optional<PeriodicityResult> period = std::nullopt;
    std::optional<int> n_period = std::nullopt;
};

/// Finds the first t <= horizon at which every coin state at A lands on B,
/// synthesizes the recovery operator and checks it on the Bloch samples.
/// Rejects odd cycles (no antipode) and horizon 0. `tolerance` bounds both the
/// block residual and 1 - fidelity.
PSTReport check_pst(const Lattice &lattice, const CoinParameters &coin, std::size_t horizon,
                    double tolerance = kTransferTolerance);

/// (C_R (x) I) U^t for a certified report.
UnitaryOperator composite_step(const PSTReport &report);

/// Recovery matrices reconstructed from disjoint pairs (0,1), (2,3), ... of
/// initial coin states and the coin amplitudes they end up with at B. All of
/// them must agree up to phase for the recovery to be unique.
std::vector<Matrix2> recoveries_from_state_pairs(const std::vector<CoinState> &initial,
                                                 const std::vector<Eigen::Vector2cd> &final_coins);

std::vector<double> default_rho_grid();

struct SweepConfig {
    Topology topology = Topology::line;
    Convention convention = Convention::spatial;
    std::vector<std::size_t> n_values;
    std::vector<double> rho_grid;
    std::vector<double> theta_grid{0.0};
    std::vector<double> phi_grid{0.0};
    /// 0 selects 50 N per lattice.
    std::size_t horizon = 0;
    bool include_uncertified = false;
    unsigned threads = 1;
    double tolerance = kTransferTolerance;
};

/// Cells are (N, rho, theta, phi); odd cycles are skipped. Output is ordered
/// by cell regardless of thread count.
std::vector<PSTReport> sweep(const SweepConfig &config);

struct FidelityMap {
    Lattice lattice;
    CoinParameters coin;
    std::size_t target;
    std::size_t horizon;
    std::vector<double> theta_values;  // [0, pi]
    std::vector<double> phi_values;    // [0, 2 pi]
    std::vector<double> values;        // theta-major: values[i * phi_values.size() + j]

    double at(std::size_t i, std::size_t j) const { return values[i * phi_values.size() + j]; }
    double max() const;
};

/// Max over 1 <= t <= horizon of the fidelity at B against the initial coin
/// state, with an optional coin operator applied after the walk.
FidelityMap fidelity_map(const Lattice &lattice, const CoinParameters &coin, std::size_t theta_resolution,
                         std::size_t phi_resolution, std::size_t horizon,
                         const std::optional<Matrix2> &recovery = std::nullopt);

struct PeakAnalysis {
    std::size_t site;
    std::size_t horizon;
    double threshold;
    /// 2 when P vanishes on every other step (bipartite lattices), else 1.
    std::size_t stride;
    double max_value;
    std::size_t max_time;
    std::vector<std::size_t> peak_times;
    std::vector<double> peak_values;
    std::vector<std::size_t> gaps;
    /// Peaks of peaks, refined until neighbours are at least min_quasi_period apart.
    std::vector<std::size_t> envelope_times;
    std::vector<double> envelope_values;
    std::vector<std::size_t> quasi_periods;
};

PeakAnalysis analyze_peaks(const std::vector<double> &series, std::size_t site, double threshold,
                           std::size_t min_quasi_period = 1000);

PeakAnalysis peak_analysis(const Lattice &lattice, const CoinParameters &coin, const CoinState &initial,
                           std::size_t site, std::size_t horizon, double threshold,
                           std::size_t min_quasi_period = 1000);

struct ClosedFormCheck {
    std::string family;
    std::size_t n;
    std::size_t l;
    std::size_t t;
    double theta;
    double phi;
    double deviation;
};

struct ClosedFormReport {
    std::vector<ClosedFormCheck> checks;
    double max_deviation = 0.0;
};

/// Compares simulated U^t columns for both coin basis states at site 1 against
/// the analytic states of the rho = 1 and local flip-coin families.
ClosedFormReport verify_closed_forms(std::size_t max_n, std::size_t l_max, const std::vector<double> &angle_grid);

struct FlipLineWitness {
    std::size_t n;
    std::size_t horizon;
    CoinState initial;
    double max_target_probability;
    std::size_t max_time;
    /// Largest probability that the up component is ever found away from site 1.
    double up_component_escape;
    /// First time the down component is at site N with probability 1, if ever.
    std::optional<std::size_t> down_component_arrival;
    /// max_target_probability <= 1 - 1e-9.
    bool bounded_away_from_one;
};

/// Flip coin, local convention, N-line.
FlipLineWitness flip_line_no_pst_witness(std::size_t n, std::size_t horizon, const CoinState &initial);

}  // namespace qwalk

#endif
