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

#include "qwalk/core.hpp"

#include <cmath>
#include <sstream>

namespace qwalk {

double canonical_angle(double radians) {
    if (!std::isfinite(radians)) {
        throw Error("angle must be finite");
    }
    double r = std::fmod(radians, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative number can round back up to exactly 2pi; the
    // equality test also turns -0 into +0.
    if (r >= kTwoPi || r == 0.0) {
        r = 0.0;
    }
    return r;
}

CoinParameters::CoinParameters(double rho, double theta, double phi)
    : rho_(rho), theta_(canonical_angle(theta)), phi_(canonical_angle(phi)) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw Error("coin bias rho must lie in [0, 1], got " + std::to_string(rho));
    }
}

std::string to_string(const CoinParameters &p) {
    std::ostringstream out;
    out.precision(17);
    out << "(rho=" << p.rho() << ", theta=" << p.theta() << ", phi=" << p.phi() << ")";
    return out.str();
}

CoinState::CoinState(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
    double n = std::norm(alpha) + std::norm(beta);
    if (!(std::abs(n - 1.0) <= 1e-12)) {
        throw Error("coin state must be normalized, |alpha|^2 + |beta|^2 = " + std::to_string(n));
    }
}

CoinState bloch_to_coin(double theta_b, double phi_b) {
    return {std::cos(theta_b / 2), std::polar(std::sin(theta_b / 2), phi_b)};
}

std::string to_string(Topology t) { return t == Topology::line ? "line" : "cycle"; }
std::string to_string(Convention c) { return c == Convention::spatial ? "spatial" : "local"; }

Topology parse_topology(const std::string &s) {
    if (s == "line") return Topology::line;
    if (s == "cycle") return Topology::cycle;
    throw Error("unknown topology '" + s + "' (expected line or cycle)");
}

Convention parse_convention(const std::string &s) {
    if (s == "spatial") return Convention::spatial;
    if (s == "local") return Convention::local;
    throw Error("unknown direction convention '" + s + "' (expected spatial or local)");
}

Lattice::Lattice(Topology topology, std::size_t n_sites, Convention convention)
    : topology_(topology), n_sites_(n_sites), convention_(convention) {
    if (n_sites < 2) {
        throw Error("a lattice needs at least 2 sites");
    }
    if (topology == Topology::cycle && convention == Convention::local && n_sites % 2 != 0) {
        throw Error("local direction convention is ill-defined on an odd cycle (N=" + std::to_string(n_sites) + ")");
    }
}

std::size_t Lattice::target_site() const {
    if (topology_ == Topology::line) {
        return n_sites_;
    }
    if (n_sites_ % 2 != 0) {
        throw Error("odd cycle has no unique antipodal site (N=" + std::to_string(n_sites_) + ")");
    }
    return n_sites_ / 2 + 1;
}

void Lattice::check_site(std::size_t site) const {
    if (site < 1 || site > n_sites_) {
        throw Error("site " + std::to_string(site) + " out of range 1.." + std::to_string(n_sites_));
    }
}

std::size_t Lattice::index(CoinBasis coin, std::size_t site) const {
    check_site(site);
    return static_cast<std::size_t>(coin) * n_sites_ + (site - 1);
}

std::string to_string(const Lattice &l) {
    return std::to_string(l.n_sites()) + "-" + to_string(l.topology()) + "/" + to_string(l.convention());
}

WalkState::WalkState(Lattice lattice, Vector amplitudes, std::size_t step_count)
    : lattice_(lattice), amplitudes_(std::move(amplitudes)), step_count_(step_count) {
    if (static_cast<std::size_t>(amplitudes_.size()) != lattice_.dimension()) {
        throw Error("amplitude vector has length " + std::to_string(amplitudes_.size()) + ", lattice needs " +
                    std::to_string(lattice_.dimension()));
    }
}

Complex WalkState::alpha(std::size_t site) const { return amplitudes_(lattice_.index(CoinBasis::up, site)); }
Complex WalkState::beta(std::size_t site) const { return amplitudes_(lattice_.index(CoinBasis::down, site)); }

WalkState WalkState::with_global_phase(double gamma) const {
    return {lattice_, amplitudes_ * std::polar(1.0, gamma), step_count_};
}

WalkState localized_state(const CoinState &coin, std::size_t site, const Lattice &lattice) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(lattice.dimension()));
    v(lattice.index(CoinBasis::up, site)) = coin.alpha();
    v(lattice.index(CoinBasis::down, site)) = coin.beta();
    return {lattice, std::move(v), 0};
}

Complex inner_product(const WalkState &a, const WalkState &b) {
    if (a.amplitudes().size() != b.amplitudes().size()) {
        throw Error("inner product of states with different dimensions");
    }
    return a.amplitudes().dot(b.amplitudes());
}

double unitarity_residual(const Matrix &m) {
    if (m.rows() != m.cols()) {
        throw Error("unitarity check on a non-square matrix");
    }
    Matrix d = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff();
}

UnitaryOperator::UnitaryOperator(Lattice lattice, Matrix matrix, double tolerance)
    : lattice_(lattice), matrix_(std::move(matrix)) {
    if (static_cast<std::size_t>(matrix_.rows()) != lattice_.dimension() || matrix_.rows() != matrix_.cols()) {
        throw Error("operator shape does not match lattice dimension " + std::to_string(lattice_.dimension()));
    }
    double r = qwalk::unitarity_residual(matrix_);
    if (!(r < tolerance)) {
        throw Error("operator is not unitary: residual " + std::to_string(r));
    }
}

double UnitaryOperator::unitarity_residual() const { return qwalk::unitarity_residual(matrix_); }

UnitaryOperator UnitaryOperator::power(std::size_t t) const {
    Matrix result = Matrix::Identity(matrix_.rows(), matrix_.cols());
    Matrix base = matrix_;
    while (t > 0) {
        if (t & 1) {
            result = base * result;
        }
        base = base * base;
        t >>= 1;
    }
    return {lattice_, std::move(result), 1e-9};
}

UnitaryOperator operator*(const UnitaryOperator &a, const UnitaryOperator &b) {
    if (a.dimension() != b.dimension()) {
        throw Error("operator dimension mismatch");
    }
    return {a.lattice(), a.matrix() * b.matrix(), 1e-9};
}

}  // namespace qwalk
