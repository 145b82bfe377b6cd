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

#include "qwalk/evolution.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "qwalk/pst.hpp"

using namespace qwalk;

namespace {

const CoinState kPlusI = bloch_to_coin(kPi / 2, kPi / 2);

std::optional<std::size_t> period_of(const Lattice &l, double rho, double theta = 0, double phi = 0,
                                     std::size_t horizon = 200) {
    auto p = detect_periodicity(step_operator(CoinParameters(rho, theta, phi), l), horizon);
    if (!p) return std::nullopt;
    return p->period;
}

}  // namespace

TEST(evolve, dense_and_map_agree) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0), angle(0.0, kTwoPi);
    std::uniform_int_distribution<std::size_t> n(2, 10);
    for (int cell = 0; cell < 100; ++cell) {
        Lattice l(cell % 2 ? Topology::cycle : Topology::line, n(rng));
        CoinParameters c(unit(rng), angle(rng), angle(rng));
        WalkState s0 = localized_state(bloch_to_coin(angle(rng) / 2, angle(rng)), 1 + cell % l.n_sites(), l);
        WalkState dense = evolve(s0, 200, step_operator(c, l));
        WalkState map = evolve_map(s0, 200, c);
        EXPECT_EQ(dense.step_count(), 200u);
        EXPECT_EQ(map.step_count(), 200u);
        EXPECT_LT((dense.amplitudes() - map.amplitudes()).cwiseAbs().maxCoeff(), 1e-12) << to_string(l);
    }
}

TEST(evolve, map_form_needs_spatial_labels) {
    Lattice l = Lattice::cycle(4, Convention::local);
    EXPECT_THROW(evolve_map(localized_state(kPlusI, 1, l), 3, CoinParameters::hadamard()), Error);
}

TEST(evolve, rejects_mismatched_operator) {
    WalkState s = localized_state(kPlusI, 1, Lattice::line(3));
    EXPECT_THROW(evolve(s, 1, step_operator(CoinParameters::hadamard(), Lattice::cycle(3))), Error);
}

TEST(evolve, conserves_norm_over_long_runs) {
    for (const Lattice &l : {Lattice::line(6), Lattice::cycle(6), Lattice::line(10)}) {
        WalkState s = localized_state(kPlusI, 1, l);
        const UnitaryOperator u = step_operator(CoinParameters(0.37, 0.4, 2.9), l);
        for (int chunk = 0; chunk < 15; ++chunk) {
            s = evolve(s, 1000, u);
            ASSERT_LT(std::abs(s.norm() - 1.0), 1e-8);
        }
        EXPECT_EQ(s.step_count(), 15000u);
    }
}

TEST(fidelity, invariant_under_global_phase) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    Lattice l = Lattice::cycle(4);
    WalkState s = evolve(localized_state(kPlusI, 1, l), 3, step_operator(CoinParameters(0.3, 1, 2), l));
    for (int k = 0; k < 200; ++k) {
        WalkState p = s.with_global_phase(angle(rng));
        for (std::size_t x = 1; x <= 4; ++x) {
            EXPECT_NEAR(fidelity(p, kPlusI, x), fidelity(s, kPlusI, x), 16 * std::numeric_limits<double>::epsilon());
        }
    }
}

TEST(evolve, hadamard_four_cycle_returns_after_eight_steps) {
    Lattice l = Lattice::cycle(4);
    const UnitaryOperator u = step_operator(CoinParameters::hadamard(), l);
    WalkState s = localized_state(kPlusI, 1, l);
    EXPECT_NEAR(site_probability(evolve(s, 4, u), 3), 1.0, 1e-12);
    EXPECT_NEAR(site_probability(evolve(s, 8, u), 1), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(evolve(s, 8, u), kPlusI, 1), 1.0, 1e-12);
}

TEST(transfer_block, trivial_cases) {
    const UnitaryOperator u = step_operator(CoinParameters::hadamard(), Lattice::line(3));
    TransferBlock b = transfer_block(u, 0, 2, 2);
    EXPECT_EQ(b.block, Matrix2::Identity());
    EXPECT_EQ(b.residual, 0.0);
    EXPECT_TRUE(b.perfect());
    EXPECT_FALSE(transfer_block(u, 1, 1, 3).perfect());
}

TEST(transfer_block, residual_matches_sampled_probabilities) {
    const std::vector<CoinState> samples = bloch_samples();
    for (const Lattice &l : {Lattice::line(2), Lattice::cycle(4), Lattice::line(3), Lattice::cycle(6)}) {
        for (double rho : {0.25, 0.5, 1.0}) {
            const UnitaryOperator u = step_operator(CoinParameters(rho, 0, 0), l);
            for (std::size_t t = 1; t <= 14; ++t) {
                bool perfect = transfer_block(u, t, 1, l.target_site()).perfect();
                double worst = 1.0;
                for (const CoinState &c : samples) {
                    worst = std::min(worst, site_probability(evolve(localized_state(c, 1, l), t, u), l.target_site()));
                }
                EXPECT_EQ(perfect, worst > 1 - 1e-8) << to_string(l) << " rho=" << rho << " t=" << t;
            }
        }
    }
}

TEST(detect_periodicity, small_lattices) {
    for (const Lattice &l : {Lattice::line(2), Lattice::cycle(4)}) {
        EXPECT_EQ(period_of(l, 0.25), 12u);
        EXPECT_EQ(period_of(l, 0.5), 8u);
        EXPECT_EQ(period_of(l, 0.75), 6u);
        EXPECT_EQ(period_of(l, 1.0), 4u);
        EXPECT_EQ(period_of(l, 0.0), 2u);
    }
    for (double rho : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        EXPECT_EQ(period_of(Lattice::cycle(2), rho), 2u);
    }
    EXPECT_EQ(period_of(Lattice::line(4), 0.5), 24u);
    EXPECT_EQ(period_of(Lattice::line(6), 0.5, 0, 0, 300), std::nullopt);
    EXPECT_THROW(detect_periodicity(step_operator(CoinParameters::hadamard(), Lattice::line(2)), 0), Error);
}

TEST(detect_periodicity, identity_coin_lines_have_period_two_n) {
    for (std::size_t n = 2; n <= 10; ++n) {
        auto p = detect_periodicity(step_operator(CoinParameters(1, 0, 0), Lattice::line(n)), 100);
        ASSERT_TRUE(p);
        EXPECT_EQ(p->period, 2 * n);
        EXPECT_NEAR(std::abs(std::polar(1.0, p->phase) - (n % 2 ? -1.0 : 1.0)), 0, 1e-12) << n;
    }
}

TEST(proportional_to_identity, reports_phase) {
    double phase = 0;
    Matrix m = Matrix::Identity(4, 4) * std::polar(1.0, 2.5);
    EXPECT_TRUE(proportional_to_identity(m, 1e-9, &phase));
    EXPECT_NEAR(phase, 2.5, 1e-15);
    m(1, 1) *= -1.0;
    EXPECT_FALSE(proportional_to_identity(m, 1e-9));
}

TEST(n_periodicity, composite_steps) {
    // 2-line Hadamard with the recovery after four steps bounces between the two sites.
    Lattice two = Lattice::line(2);
    PSTReport r = check_pst(two, CoinParameters::hadamard(), 100);
    ASSERT_TRUE(r.certified);
    EXPECT_EQ(n_periodicity(composite_step(r), 1, 20), 2);

    // 2-cycle with the coin undone after every step.
    Lattice c2 = Lattice::cycle(2);
    CoinParameters c(0.3, 1.2, 0.4);
    UnitaryOperator undo = coin_operator(Matrix2(coin_matrix(c).adjoint()), c2);
    UnitaryOperator u2 = undo * step_operator(c, c2);
    EXPECT_LE((u2.power(2).matrix() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 16 * std::numeric_limits<double>::epsilon());
    EXPECT_EQ(n_periodicity(u2, 1, 10), 2);

    // Odd identity-coin cycle: the recovery after N steps fixes every state at site 1.
    for (std::size_t n : {3u, 5u, 7u}) {
        Lattice l = Lattice::cycle(n);
        CoinParameters id(1, 0.4, 0.9);
        CoinParameters rec = closed_form_recovery(ClosedFormCase::identity_cycle_odd, l, id);
        UnitaryOperator comp = coin_operator(coin_matrix(rec), l) * step_operator(id, l).power(n);
        EXPECT_EQ(n_periodicity(comp, 1, 10), 1) << n;
    }

    // Plain Hadamard steps never localize.
    EXPECT_EQ(n_periodicity(step_operator(CoinParameters::hadamard(), Lattice::line(6)), 1, 50), std::nullopt);
}

TEST(probability_series, starts_at_the_initial_state) {
    Lattice l = Lattice::line(4);
    std::vector<double> p =
        probability_series(localized_state(kPlusI, 1, l), step_operator(CoinParameters::hadamard(), l), 1, 30);
    ASSERT_EQ(p.size(), 31u);
    EXPECT_EQ(p[0], 1.0);
    for (double v : p) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0 + 1e-12);
    }
}
