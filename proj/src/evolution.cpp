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

#include <cmath>
#include <set>

namespace qwalk {

namespace {

void check_dims(const WalkState &s, const UnitaryOperator &u) {
    if (!(s.lattice() == u.lattice())) {
        throw Error("state on " + to_string(s.lattice()) + " does not match operator on " + to_string(u.lattice()));
    }
}

}  // namespace

WalkState evolve(const WalkState &state, std::size_t steps, const UnitaryOperator &u) {
    check_dims(state, u);
    Vector v = state.amplitudes();
    Vector scratch(v.size());
    for (std::size_t k = 0; k < steps; ++k) {
        scratch.noalias() = u.matrix() * v;
        v.swap(scratch);
    }
    return {state.lattice(), std::move(v), state.step_count() + steps};
}

WalkState evolve_map(const WalkState &state, std::size_t steps, const CoinParameters &coin) {
    const Lattice &lat = state.lattice();
    if (lat.convention() != Convention::spatial) {
        throw Error("evolve_map encodes spatial directions; use evolve with the dense step for the local convention");
    }
    const std::size_t n = lat.n_sites();
    const bool cyc = lat.topology() == Topology::cycle;
    const Matrix2 c = coin_matrix(coin);

    std::vector<Complex> a(n), b(n), up(n), down(n);
    for (std::size_t x = 0; x < n; ++x) {
        a[x] = state.amplitudes()(static_cast<Eigen::Index>(x));
        b[x] = state.amplitudes()(static_cast<Eigen::Index>(n + x));
    }
    for (std::size_t k = 0; k < steps; ++k) {
        // Right-going (up) and left-going (down) parts after the coin.
        for (std::size_t x = 0; x < n; ++x) {
            up[x] = c(0, 0) * a[x] + c(0, 1) * b[x];
            down[x] = c(1, 0) * a[x] + c(1, 1) * b[x];
        }
        for (std::size_t x = 0; x < n; ++x) {
            if (x > 0) {
                a[x] = up[x - 1];
            } else {
                a[x] = cyc ? up[n - 1] : down[0];
            }
            if (x + 1 < n) {
                b[x] = down[x + 1];
            } else {
                b[x] = cyc ? down[0] : up[n - 1];
            }
        }
    }
    Vector v(static_cast<Eigen::Index>(2 * n));
    for (std::size_t x = 0; x < n; ++x) {
        v(static_cast<Eigen::Index>(x)) = a[x];
        v(static_cast<Eigen::Index>(n + x)) = b[x];
    }
    return {lat, std::move(v), state.step_count() + steps};
}

double site_probability(const WalkState &state, std::size_t site) {
    return std::norm(state.alpha(site)) + std::norm(state.beta(site));
}

double fidelity(const WalkState &state, const CoinState &target_coin, std::size_t target_site) {
    Complex overlap = std::conj(target_coin.alpha()) * state.alpha(target_site) +
                      std::conj(target_coin.beta()) * state.beta(target_site);
    return std::abs(overlap);
}

TransferBlock block_of(const Matrix &u_power, const Lattice &lattice, std::size_t t, std::size_t source,
                       std::size_t target) {
    const std::size_t rows[2] = {lattice.index(CoinBasis::up, target), lattice.index(CoinBasis::down, target)};
    const std::size_t cols[2] = {lattice.index(CoinBasis::up, source), lattice.index(CoinBasis::down, source)};
    Matrix2 blk;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            blk(i, j) = u_power(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j]));
        }
    }
    Matrix2 d = blk.adjoint() * blk - Matrix2::Identity();
    return {t, source, target, blk, d.cwiseAbs().maxCoeff()};
}

TransferBlock transfer_block(const UnitaryOperator &u, std::size_t t, std::size_t source, std::size_t target) {
    u.lattice().check_site(source);
    u.lattice().check_site(target);
    return block_of(u.power(t).matrix(), u.lattice(), t, source, target);
}

bool proportional_to_identity(const Matrix &m, double tolerance, double *phase) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < m.rows(); ++i) {
        if (std::abs(m(i, i)) > std::abs(m(best, best))) {
            best = i;
        }
    }
    const Complex c = m(best, best);
    if (std::abs(std::abs(c) - 1.0) > tolerance) {
        return false;
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const Complex expected = i == j ? c : Complex(0.0, 0.0);
            if (std::abs(m(i, j) - expected) > tolerance) {
                return false;
            }
        }
    }
    if (phase != nullptr) {
        *phase = canonical_angle(std::arg(c));
    }
    return true;
}

std::optional<PeriodicityResult> detect_periodicity(const UnitaryOperator &u, std::size_t horizon) {
    if (horizon < 1) {
        throw Error("periodicity horizon must be at least 1");
    }
    Matrix p = u.matrix();
    Matrix scratch(p.rows(), p.cols());
    for (std::size_t t = 1; t <= horizon; ++t) {
        double phase = 0.0;
        if (proportional_to_identity(p, 1e-9, &phase)) {
            return PeriodicityResult{t, phase, 1};
        }
        scratch.noalias() = u.matrix() * p;
        p.swap(scratch);
    }
    return std::nullopt;
}

std::optional<int> n_periodicity(const UnitaryOperator &u_composite, std::size_t start_site, std::size_t horizon) {
    const Lattice &lat = u_composite.lattice();
    lat.check_site(start_site);
    std::set<std::size_t> visited{start_site};
    Matrix p = u_composite.matrix();
    Matrix scratch(p.rows(), p.cols());
    for (std::size_t k = 1; k <= horizon; ++k) {
        for (std::size_t x = 1; x <= lat.n_sites(); ++x) {
            TransferBlock b = block_of(p, lat, k, start_site, x);
            if (!b.perfect()) {
                continue;
            }
            Matrix blk = b.block;
            if (x == start_site && proportional_to_identity(blk, kTransferTolerance)) {
                return static_cast<int>(visited.size());
            }
            visited.insert(x);
            break;
        }
        scratch.noalias() = u_composite.matrix() * p;
        p.swap(scratch);
    }
    return std::nullopt;
}

std::vector<double> probability_series(const WalkState &initial, const UnitaryOperator &u, std::size_t site,
                                       std::size_t horizon) {
    check_dims(initial, u);
    initial.lattice().check_site(site);
    std::vector<double> out;
    out.reserve(horizon + 1);
    Vector v = initial.amplitudes();
    Vector scratch(v.size());
    const std::size_t iu = initial.lattice().index(CoinBasis::up, site);
    const std::size_t id = initial.lattice().index(CoinBasis::down, site);
    for (std::size_t t = 0; t <= horizon; ++t) {
        out.push_back(std::norm(v(static_cast<Eigen::Index>(iu))) + std::norm(v(static_cast<Eigen::Index>(id))));
        if (t < horizon) {
            scratch.noalias() = u.matrix() * v;
            v.swap(scratch);
        }
    }
    return out;
}

}  // namespace qwalk
