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

#include "qwalk/pst.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace qwalk {

namespace {

constexpr double kUnitProbability = 1e-9;

Eigen::Vector2cd coin_at(const WalkState &s, std::size_t site) { return {s.alpha(site), s.beta(site)}; }

// Ten pairwise non-parallel sample states: off the poles, two azimuths per ring.
std::vector<CoinState> uniqueness_probe_states() {
    std::vector<CoinState> out;
    for (int k = 1; k <= 5; ++k) {
        for (int j : {0, 3}) {
            out.push_back(bloch_to_coin(k * kPi / 7, kTwoPi * j / 8));
        }
    }
    return out;
}

}  // namespace

std::vector<CoinState> bloch_samples() {
    std::vector<CoinState> out;
    out.reserve(64);
    for (int k = 0; k < 8; ++k) {
        for (int j = 0; j < 8; ++j) {
            out.push_back(bloch_to_coin(k * kPi / 7, kTwoPi * j / 8));
        }
    }
    return out;
}

std::size_t default_horizon(const Lattice &lattice) { return 50 * lattice.n_sites(); }

std::vector<Matrix2> recoveries_from_state_pairs(const std::vector<CoinState> &initial,
                                                 const std::vector<Eigen::Vector2cd> &final_coins) {
    if (initial.size() != final_coins.size()) {
        throw Error("initial and final state lists differ in length");
    }
    std::vector<Matrix2> out;
    for (std::size_t i = 0; i + 1 < initial.size(); i += 2) {
        Matrix2 psi;
        psi << initial[i].alpha(), initial[i + 1].alpha(), initial[i].beta(), initial[i + 1].beta();
        Matrix2 fin;
        fin.col(0) = final_coins[i];
        fin.col(1) = final_coins[i + 1];
        // fin = M psi, and the recovery undoes M.
        out.push_back(psi * fin.inverse());
    }
    return out;
}

PSTReport check_pst(const Lattice &lattice, const CoinParameters &coin, std::size_t horizon, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw Error("check_pst: tolerance must be positive");
    }
    if (horizon == 0) {
        throw Error("check_pst: horizon must be positive");
    }
    PSTReport rep{.lattice = lattice,
                  .coin = coin,
                  .horizon = horizon,
                  .source = lattice.source_site(),
                  .target = lattice.target_site()};
    const UnitaryOperator u = step_operator(coin, lattice);

    Matrix p = u.matrix();
    Matrix scratch(p.rows(), p.cols());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t t = 1; t <= horizon; ++t) {
        TransferBlock b = block_of(p, lattice, t, rep.source, rep.target);
        if (b.perfect(tolerance)) {
            if (!rep.transfer_time) {
                rep.transfer_time = t;
                rep.block = b.block;
                rep.residual = b.residual;
                rep.best_time = t;
            } else {
                rep.later_transfer_times.push_back(t);
            }
        } else if (!rep.transfer_time && b.residual < best) {
            best = b.residual;
            rep.best_time = t;
            rep.residual = b.residual;
        }
        scratch.noalias() = u.matrix() * p;
        p.swap(scratch);
    }
    rep.period = detect_periodicity(u, horizon);
    if (!rep.transfer_time) {
        return rep;
    }

    const std::size_t t = *rep.transfer_time;
    rep.recovery = recovery_from_transfer_block(rep.block);
    const UnitaryOperator recover = coin_operator(coin_matrix(rep.recovery->params), lattice);

    double worst = 1.0;
    for (const CoinState &psi : bloch_samples()) {
        WalkState s = evolve(localized_state(psi, rep.source, lattice), t, u);
        s = evolve(s, 1, recover);
        worst = std::min(worst, fidelity(s, psi, rep.target));
    }
    rep.min_recovered_fidelity = worst;

    std::vector<CoinState> probes = uniqueness_probe_states();
    std::vector<Eigen::Vector2cd> finals;
    for (const CoinState &psi : probes) {
        finals.push_back(coin_at(evolve(localized_state(psi, rep.source, lattice), t, u), rep.target));
    }
    std::vector<Matrix2> recs = recoveries_from_state_pairs(probes, finals);
    rep.recovery_unique = std::all_of(recs.begin(), recs.end(), [&](const Matrix2 &r) {
        return distance_up_to_phase(r, recs.front()) < 1e-9;
    });

    rep.certified = worst > 1.0 - tolerance && rep.recovery_unique;
    if (rep.certified) {
        rep.n_period = n_periodicity(composite_step(rep), rep.source, 4 * lattice.n_sites());
        if (rep.period) {
            rep.period->n_period = rep.n_period.value_or(1);
        }
    }
    return rep;
}

UnitaryOperator composite_step(const PSTReport &report) {
    if (!report.transfer_time || !report.recovery) {
        throw Error("composite_step needs a report with a transfer time and a recovery operator");
    }
    const UnitaryOperator u = step_operator(report.coin, report.lattice);
    return coin_operator(coin_matrix(report.recovery->params), report.lattice) * u.power(*report.transfer_time);
}

std::vector<double> default_rho_grid() {
    std::vector<double> rhos;
    for (int k = 0; k <= 8; ++k) {
        rhos.push_back(k / 8.0);
    }
    return rhos;
}

std::vector<PSTReport> sweep(const SweepConfig &config) {
    struct Cell {
        std::size_t n;
        double rho, theta, phi;
    };
    std::vector<Cell> cells;
    for (std::size_t n : config.n_values) {
        if (config.topology == Topology::cycle && n % 2 != 0) {
            continue;
        }
        for (double rho : config.rho_grid) {
            for (double theta : config.theta_grid) {
                for (double phi : config.phi_grid) {
                    cells.push_back({n, rho, theta, phi});
                }
            }
        }
    }

    std::vector<std::optional<PSTReport>> results(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const Cell &c = cells[i];
            Lattice lat(config.topology, c.n, config.convention);
            std::size_t h = config.horizon ? config.horizon : default_horizon(lat);
            results[i] = check_pst(lat, CoinParameters(c.rho, c.theta, c.phi), h, config.tolerance);
        }
    };
    unsigned threads = std::max(1u, config.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k) {
            pool.emplace_back(worker);
        }
    }

    std::vector<PSTReport> out;
    for (auto &r : results) {
        if (r->certified || config.include_uncertified) {
            out.push_back(std::move(*r));
        }
    }
    return out;
}

double FidelityMap::max() const { return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end()); }

FidelityMap fidelity_map(const Lattice &lattice, const CoinParameters &coin, std::size_t theta_resolution,
                         std::size_t phi_resolution, std::size_t horizon, const std::optional<Matrix2> &recovery) {
    if (theta_resolution < 2 || phi_resolution < 2) {
        throw Error("fidelity map resolution must be at least 2 in each axis");
    }
    if (horizon == 0) {
        throw Error("fidelity map horizon must be positive");
    }
    FidelityMap map{lattice, coin, lattice.target_site(), horizon, {}, {}, {}};
    for (std::size_t i = 0; i < theta_resolution; ++i) {
        map.theta_values.push_back(kPi * static_cast<double>(i) / static_cast<double>(theta_resolution - 1));
    }
    for (std::size_t j = 0; j < phi_resolution; ++j) {
        map.phi_values.push_back(kTwoPi * static_cast<double>(j) / static_cast<double>(phi_resolution - 1));
    }

    // Only the A -> B block of U^t matters for the overlap at B.
    const UnitaryOperator u = step_operator(coin, lattice);
    std::vector<Matrix2> blocks;
    blocks.reserve(horizon);
    Matrix p = u.matrix();
    Matrix scratch(p.rows(), p.cols());
    for (std::size_t t = 1; t <= horizon; ++t) {
        Matrix2 b = block_of(p, lattice, t, lattice.source_site(), map.target).block;
        blocks.push_back(recovery ? Matrix2(*recovery * b) : b);
        scratch.noalias() = u.matrix() * p;
        p.swap(scratch);
    }

    map.values.reserve(theta_resolution * phi_resolution);
    for (double th : map.theta_values) {
        for (double ph : map.phi_values) {
            CoinState c = bloch_to_coin(th, ph);
            Eigen::Vector2cd psi(c.alpha(), c.beta());
            double best = 0.0;
            for (const Matrix2 &b : blocks) {
                best = std::max(best, std::abs(psi.dot(b * psi)));
            }
            map.values.push_back(best);
        }
    }
    return map;
}

namespace {

// Strict local maxima of `vals`. With `ends`, a boundary element counts when it
// exceeds its single neighbour.
std::vector<std::size_t> local_maxima(const std::vector<double> &vals, bool ends) {
    std::vector<std::size_t> out;
    const std::size_t n = vals.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool has_left = i > 0;
        bool has_right = i + 1 < n;
        if (!ends && (!has_left || !has_right)) {
            continue;
        }
        if ((!has_left || vals[i] > vals[i - 1]) && (!has_right || vals[i] > vals[i + 1]) && n > 1) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> diffs(const std::vector<std::size_t> &ts) {
    std::vector<std::size_t> g;
    for (std::size_t i = 1; i < ts.size(); ++i) {
        g.push_back(ts[i] - ts[i - 1]);
    }
    return g;
}

}  // namespace

PeakAnalysis analyze_peaks(const std::vector<double> &series, std::size_t site, double threshold,
                           std::size_t min_quasi_period) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw Error("peak threshold must lie in (0, 1)");
    }
    if (series.size() < 2) {
        throw Error("peak analysis needs a horizon of at least 1");
    }
    PeakAnalysis out{site, series.size() - 1, threshold, 1, 0.0, 0, {}, {}, {}, {}, {}, {}};
    auto mx = std::max_element(series.begin(), series.end());
    out.max_value = *mx;
    out.max_time = static_cast<std::size_t>(mx - series.begin());

    auto parity_vanishes = [&](std::size_t parity) {
        for (std::size_t t = parity; t < series.size(); t += 2) {
            if (series[t] > 1e-14) return false;
        }
        return true;
    };
    std::size_t first = 0;
    if (parity_vanishes(1)) {
        out.stride = 2;
    } else if (parity_vanishes(0)) {
        out.stride = 2;
        first = 1;
    }

    std::vector<std::size_t> times;
    std::vector<double> vals;
    for (std::size_t t = first; t < series.size(); t += out.stride) {
        times.push_back(t);
        vals.push_back(series[t]);
    }
    for (std::size_t i : local_maxima(vals, false)) {
        if (vals[i] > threshold) {
            out.peak_times.push_back(times[i]);
            out.peak_values.push_back(vals[i]);
        }
    }
    out.gaps = diffs(out.peak_times);

    std::vector<std::size_t> et = out.peak_times;
    std::vector<double> ev = out.peak_values;
    auto too_close = [&](const std::vector<std::size_t> &ts) {
        std::vector<std::size_t> g = diffs(ts);
        return !g.empty() && *std::min_element(g.begin(), g.end()) < min_quasi_period;
    };
    while (et.size() >= 2 && too_close(et)) {
        std::vector<std::size_t> keep = local_maxima(ev, true);
        if (keep.size() == et.size() || keep.empty()) {
            break;
        }
        std::vector<std::size_t> nt;
        std::vector<double> nv;
        for (std::size_t i : keep) {
            nt.push_back(et[i]);
            nv.push_back(ev[i]);
        }
        et.swap(nt);
        ev.swap(nv);
    }
    out.envelope_times = et;
    out.envelope_values = ev;
    if (!too_close(et)) {
        out.quasi_periods = diffs(et);
    }
    return out;
}

PeakAnalysis peak_analysis(const Lattice &lattice, const CoinParameters &coin, const CoinState &initial,
                           std::size_t site, std::size_t horizon, double threshold, std::size_t min_quasi_period) {
    if (horizon < 1) {
        throw Error("peak analysis needs a horizon of at least 1");
    }
    lattice.check_site(site);
    const UnitaryOperator u = step_operator(coin, lattice);
    std::vector<double> series =
        probability_series(localized_state(initial, lattice.source_site(), lattice), u, site, horizon);
    return analyze_peaks(series, site, threshold, min_quasi_period);
}

namespace {

// Max deviation between the two source columns of `p` and the expected
// columns, each given as a list of (basis index, amplitude) pairs.
double column_deviation(const Matrix &p, const Lattice &lat,
                        const std::vector<std::pair<std::size_t, Complex>> &up_col,
                        const std::vector<std::pair<std::size_t, Complex>> &down_col) {
    double dev = 0.0;
    for (CoinBasis c : {CoinBasis::up, CoinBasis::down}) {
        Vector expected = Vector::Zero(p.rows());
        for (auto [i, a] : c == CoinBasis::up ? up_col : down_col) {
            expected(static_cast<Eigen::Index>(i)) = a;
        }
        auto col = p.col(static_cast<Eigen::Index>(lat.index(c, 1)));
        dev = std::max(dev, (col - expected).cwiseAbs().maxCoeff());
    }
    return dev;
}

}  // namespace

ClosedFormReport verify_closed_forms(std::size_t max_n, std::size_t l_max, const std::vector<double> &angle_grid) {
    if (max_n < 2) {
        throw Error("verify_closed_forms: max_n must be at least 2");
    }
    using CB = CoinBasis;
    ClosedFormReport rep;
    auto record = [&](std::string family, std::size_t n, std::size_t l, std::size_t t, double th, double ph,
                      double dev) {
        rep.max_deviation = std::max(rep.max_deviation, dev);
        rep.checks.push_back({std::move(family), n, l, t, th, ph, dev});
    };
    auto e = [](double x) { return std::polar(1.0, x); };

    for (std::size_t n = 2; n <= max_n; ++n) {
        const double nd = static_cast<double>(n);
        for (double th : angle_grid) {
            for (double ph : angle_grid) {
                const CoinParameters identity(1.0, th, ph);
                const double sigma = th + ph;

                // rho = 1 line: A -> B after N(2l-1) steps, back at A after 2Nl.
                {
                    Lattice lat = Lattice::line(n);
                    UnitaryOperator u = step_operator(identity, lat);
                    const double big = sigma * nd + parity_mu(n) * kPi;
                    for (std::size_t l = 1; l <= l_max; ++l) {
                        const double ld = static_cast<double>(l);
                        std::size_t t1 = n * (2 * l - 1);
                        Complex g1 = e((ld - 1) * big);
                        record("identity-line", n, l, t1, th, ph,
                               column_deviation(u.power(t1).matrix(), lat, {{lat.index(CB::down, n), g1}},
                                                {{lat.index(CB::up, n), -e(sigma) * g1}}));
                        std::size_t t2 = 2 * n * l;
                        Complex g2 = e(ld * big);
                        record("identity-line", n, l, t2, th, ph,
                               column_deviation(u.power(t2).matrix(), lat, {{lat.index(CB::up, 1), g2}},
                                                {{lat.index(CB::down, 1), g2}}));
                    }
                }

                // rho = 1 cycle: the down component picks up e^{i(theta+phi+pi)} per step.
                {
                    Lattice lat = Lattice::cycle(n);
                    UnitaryOperator u = step_operator(identity, lat);
                    const double big = sigma + kPi;
                    if (n % 2 == 0) {
                        std::size_t b = n / 2 + 1;
                        record("identity-cycle", n, 0, n / 2, th, ph,
                               column_deviation(u.power(n / 2).matrix(), lat, {{lat.index(CB::up, b), 1.0}},
                                                {{lat.index(CB::down, b), e(nd * big / 2)}}));
                    }
                    record("identity-cycle", n, 0, n, th, ph,
                           column_deviation(u.power(n).matrix(), lat, {{lat.index(CB::up, 1), 1.0}},
                                            {{lat.index(CB::down, 1), e(nd * big)}}));
                }

                // Flip coin with local labels on an even cycle.
                if (n % 2 == 0) {
                    Lattice lat = Lattice::cycle(n, Convention::local);
                    UnitaryOperator u = step_operator(CoinParameters(0.0, th, ph), lat);
                    std::size_t b = n / 2 + 1;
                    Complex g = e(static_cast<double>(n / 4) * sigma);
                    Matrix p = u.power(n / 2).matrix();
                    double dev = (n / 2) % 2 == 0
                                     ? column_deviation(p, lat, {{lat.index(CB::up, b), g}}, {{lat.index(CB::down, b), g}})
                                     : column_deviation(p, lat, {{lat.index(CB::down, b), g * e(ph)}},
                                                        {{lat.index(CB::up, b), g * e(th)}});
                    record("flip-local-cycle", n, 0, n / 2, th, ph, dev);
                }
            }
        }
    }
    return rep;
}

FlipLineWitness flip_line_no_pst_witness(std::size_t n, std::size_t horizon, const CoinState &initial) {
    if (horizon == 0) {
        throw Error("witness horizon must be positive");
    }
    const Lattice lat = Lattice::line(n, Convention::local);
    const UnitaryOperator u = step_operator(CoinParameters(0.0, 0.0, 0.0), lat);
    FlipLineWitness w{n, horizon, initial, 0.0, 0, 0.0, std::nullopt, false};

    std::vector<double> p = probability_series(localized_state(initial, 1, lat), u, n, horizon);
    auto mx = std::max_element(p.begin(), p.end());
    w.max_target_probability = *mx;
    w.max_time = static_cast<std::size_t>(mx - p.begin());

    std::vector<double> up_home = probability_series(localized_state(CoinState::up(), 1, lat), u, 1, horizon);
    for (double q : up_home) {
        w.up_component_escape = std::max(w.up_component_escape, 1.0 - q);
    }
    std::vector<double> down_far = probability_series(localized_state(CoinState::down(), 1, lat), u, n, horizon);
    for (std::size_t t = 0; t < down_far.size(); ++t) {
        if (down_far[t] > 1.0 - kUnitProbability) {
            w.down_component_arrival = t;
            break;
        }
    }
    w.bounded_away_from_one = w.max_target_probability <= 1.0 - kUnitProbability;
    return w;
}

}  // namespace qwalk
