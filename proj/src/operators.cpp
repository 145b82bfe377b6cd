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

#include "qwalk/operators.hpp"

#include <cmath>

namespace qwalk {

namespace {

constexpr double kDegenerate = 1e-12;

const char *kCaseNames[] = {"two-line", "identity-line", "identity-cycle-even", "identity-cycle-odd",
                            "flip-local-cycle-oddhalf"};

bool near(double a, double b) { return std::abs(a - b) <= 1e-12; }

// Destination of |coin, x> under the shift, as (coin, site), sites 1-based.
std::pair<CoinBasis, std::size_t> shift_target(const Lattice &lat, CoinBasis c, std::size_t x) {
    const std::size_t n = lat.n_sites();
    const bool cyc = lat.topology() == Topology::cycle;
    const bool up = c == CoinBasis::up;
    if (lat.convention() == Convention::spatial) {
        if (cyc) {
            return {c, up ? x % n + 1 : (x + n - 2) % n + 1};
        }
        if (up) {
            return x < n ? std::pair{c, x + 1} : std::pair{CoinBasis::down, n};
        }
        return x > 1 ? std::pair{c, x - 1} : std::pair{CoinBasis::up, std::size_t{1}};
    }
    // Local convention: edge (k, k+1) is labelled up iff k is odd. The closing
    // edge (N, 1) of a cycle follows the same rule with k = N.
    auto label_up = [](std::size_t k) { return k % 2 == 1; };
    bool right_exists = cyc || x < n;
    bool left_exists = cyc || x > 1;
    bool right_up = label_up(x);
    bool left_up = label_up(x == 1 ? n : x - 1);
    if (right_exists && right_up == up) {
        return {c, x % n + 1};
    }
    if (left_exists && left_up == up) {
        return {c, (x + n - 2) % n + 1};
    }
    return {c, x};
}

}  // namespace

Matrix2 coin_matrix(const CoinParameters &p) {
    const double s = std::sqrt(p.rho());
    const double r = std::sqrt(1.0 - p.rho());
    Matrix2 m;
    m << Complex(s, 0.0), std::polar(r, p.theta()), std::polar(r, p.phi()), -std::polar(s, p.theta() + p.phi());
    return m;
}

UnitaryOperator coin_operator(const Matrix2 &coin, const Lattice &lattice) {
    const auto n = static_cast<Eigen::Index>(lattice.n_sites());
    Matrix m = Matrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            m.block(i * n, j * n, n, n).diagonal().setConstant(coin(i, j));
        }
    }
    return {lattice, std::move(m)};
}

UnitaryOperator shift_operator(const Lattice &lattice) {
    const std::size_t dim = lattice.dimension();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (CoinBasis c : {CoinBasis::up, CoinBasis::down}) {
        for (std::size_t x = 1; x <= lattice.n_sites(); ++x) {
            auto [c2, y] = shift_target(lattice, c, x);
            m(lattice.index(c2, y), lattice.index(c, x)) = 1.0;
        }
    }
    // A collision above would leave an empty row; the unitarity check in the
    // constructor catches it.
    return {lattice, std::move(m)};
}

UnitaryOperator step_operator(const CoinParameters &coin, const Lattice &lattice) {
    return shift_operator(lattice) * coin_operator(coin_matrix(coin), lattice);
}

DecompositionResult decompose_unitary2(const Matrix2 &m, double tolerance) {
    Matrix g = m;
    double r = unitarity_residual(g);
    if (!(r < tolerance)) {
        throw Error("decompose_unitary2: matrix is not unitary (residual " + std::to_string(r) + ")");
    }
    const double a = std::abs(m(0, 0));
    const double b = std::abs(m(0, 1));
    if (a < kDegenerate) {
        return {CoinParameters(0.0, std::arg(m(0, 1)), std::arg(m(1, 0))), 0.0};
    }
    const double gamma = std::arg(m(0, 0));
    const Complex unphase = std::polar(1.0, -gamma);
    if (b < kDegenerate) {
        return {CoinParameters(1.0, 0.0, std::arg(-m(1, 1) * unphase)), canonical_angle(gamma)};
    }
    double rho = a * a / (a * a + b * b);
    return {CoinParameters(rho, std::arg(m(0, 1) * unphase), std::arg(m(1, 0) * unphase)), canonical_angle(gamma)};
}

DecompositionResult recovery_from_transfer_block(const Matrix2 &block) {
    Matrix g = block;
    double r = unitarity_residual(g);
    if (!(r < kTransferTolerance)) {
        throw Error("transfer block is not unitary (residual " + std::to_string(r) + "): transfer is not perfect");
    }
    return decompose_unitary2(block.adjoint(), kTransferTolerance);
}

std::string to_string(ClosedFormCase c) { return kCaseNames[static_cast<int>(c)]; }

ClosedFormCase parse_closed_form_case(const std::string &s) {
    for (int i = 0; i < 5; ++i) {
        if (s == kCaseNames[i]) {
            return static_cast<ClosedFormCase>(i);
        }
    }
    throw Error("unknown closed-form case '" + s + "'");
}

namespace {

void require_family(ClosedFormCase c, const Lattice &lat, const CoinParameters &coin) {
    auto fail = [&](const std::string &why) {
        throw Error("closed-form case " + to_string(c) + " does not apply to " + to_string(lat) + " with coin " +
                    to_string(coin) + ": " + why);
    };
    const bool spatial = lat.convention() == Convention::spatial;
    const bool line = lat.topology() == Topology::line;
    const std::size_t n = lat.n_sites();
    switch (c) {
        case ClosedFormCase::two_line_biased:
            if (!(line && spatial && n == 2)) fail("needs the spatial 2-line");
            if (!(near(coin.rho(), 0.25) || near(coin.rho(), 0.5))) fail("needs rho 1/4 or 1/2");
            if (coin.theta() != 0.0 || coin.phi() != 0.0) fail("needs theta = phi = 0");
            return;
        case ClosedFormCase::identity_line:
            if (!(line && spatial)) fail("needs a spatial line");
            if (coin.rho() != 1.0) fail("needs rho = 1");
            return;
        case ClosedFormCase::identity_cycle_even:
        case ClosedFormCase::identity_cycle_odd: {
            if (!(!line && spatial)) fail("needs a spatial cycle");
            bool even = c == ClosedFormCase::identity_cycle_even;
            if ((n % 2 == 0) != even) fail(even ? "needs even N" : "needs odd N");
            if (coin.rho() != 1.0) fail("needs rho = 1");
            return;
        }
        case ClosedFormCase::flip_local_cycle_odd_half:
            if (!(!line && !spatial)) fail("needs a local-convention cycle");
            if ((n / 2) % 2 != 1) fail("needs N/2 odd");
            if (coin.rho() != 0.0) fail("needs rho = 0");
            return;
    }
}

}  // namespace

std::size_t closed_form_transfer_time(ClosedFormCase c, const Lattice &lattice, const CoinParameters &coin) {
    require_family(c, lattice, coin);
    const std::size_t n = lattice.n_sites();
    switch (c) {
        case ClosedFormCase::two_line_biased:
            return near(coin.rho(), 0.25) ? 6 : 4;
        case ClosedFormCase::identity_line:
        case ClosedFormCase::identity_cycle_odd:
            return n;
        case ClosedFormCase::identity_cycle_even:
        case ClosedFormCase::flip_local_cycle_odd_half:
            return n / 2;
    }
    return 0;
}

CoinParameters closed_form_recovery(ClosedFormCase c, const Lattice &lattice, const CoinParameters &coin) {
    require_family(c, lattice, coin);
    const double n = static_cast<double>(lattice.n_sites());
    const double theta = coin.theta();
    const double phi = coin.phi();
    const double big_theta = theta + phi + kPi;
    switch (c) {
        case ClosedFormCase::two_line_biased:
            return {0.0, 0.0, -kPi};
        case ClosedFormCase::identity_line:
            return {0.0, 0.0, -theta - phi - kPi};
        case ClosedFormCase::identity_cycle_even:
            return {1.0, 0.0, -n * big_theta / 2 + kPi};
        case ClosedFormCase::identity_cycle_odd:
            return {1.0, 0.0, -n * big_theta + kPi};
        case ClosedFormCase::flip_local_cycle_odd_half:
            return {0.0, -phi, -theta};
    }
    throw Error("unreachable closed-form case");
}

double distance_up_to_phase(const Matrix2 &a, const Matrix2 &b) {
    Complex tr = (a.adjoint() * b).trace();
    Complex phase = std::abs(tr) > 0 ? tr / std::abs(tr) : Complex(1.0, 0.0);
    return (a * phase - b).cwiseAbs().maxCoeff();
}

}  // namespace qwalk
