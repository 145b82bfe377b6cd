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

#ifndef QWALK_CORE_HPP
#define QWALK_CORE_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Raised for every contract violation (bad parameters, out-of-range sites,
/// dimension mismatches, non-unitary input).
class Error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Maps an angle onto [0, 2pi).
double canonical_angle(double radians);

/// Parameters of the general unitary coin
///
///     [ sqrt(rho)              sqrt(1-rho) e^{i theta}      ]
///     [ sqrt(1-rho) e^{i phi}  -sqrt(rho) e^{i(theta+phi)}  ]
///
/// The same triple describes recovery operators applied after the walk.
/// Angles are canonicalized into [0, 2pi) on construction.
class CoinParameters {
   public:
    CoinParameters(double rho, double theta, double phi);

    double rho() const { return rho_; }
    double theta() const { return theta_; }
    double phi() const { return phi_; }

    static CoinParameters hadamard() { return {0.5, 0.0, 0.0}; }

    bool operator==(const CoinParameters &) const = default;

   private:
    double rho_;
    double theta_;
    double phi_;
};

std::string to_string(const CoinParameters &p);

enum class CoinBasis { up = 0, down = 1 };

/// Normalized qubit alpha|up> + beta|down>.
class CoinState {
   public:
    CoinState(Complex alpha, Complex beta);

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }

    static CoinState up() { return {1.0, 0.0}; }
    static CoinState down() { return {0.0, 1.0}; }

   private:
    Complex alpha_;
    Complex beta_;
};

/// (cos(theta_b/2), e^{i phi_b} sin(theta_b/2)).
CoinState bloch_to_coin(double theta_b, double phi_b);

enum class Topology { line, cycle };
enum class Convention { spatial, local };

std::string to_string(Topology t);
std::string to_string(Convention c);
Topology parse_topology(const std::string &s);
Convention parse_convention(const std::string &s);

/// Finite one-dimensional lattice. Sites are numbered 1..N.
///
/// Lines have reflecting ends (self loops); cycles connect site N back to
/// site 1. The local direction convention on a cycle needs an even number
/// of sites so that edge labels can alternate all the way around.
class Lattice {
   public:
    Lattice(Topology topology, std::size_t n_sites, Convention convention = Convention::spatial);

    static Lattice line(std::size_t n, Convention c = Convention::spatial) { return {Topology::line, n, c}; }
    static Lattice cycle(std::size_t n, Convention c = Convention::spatial) { return {Topology::cycle, n, c}; }

    Topology topology() const { return topology_; }
    std::size_t n_sites() const { return n_sites_; }
    Convention convention() const { return convention_; }
    std::size_t dimension() const { return 2 * n_sites_; }

    /// Starting site A (always site 1).
    std::size_t source_site() const { return 1; }
    /// Whether an antipodal target B exists (lines, and even cycles).
    bool has_target() const { return topology_ == Topology::line || n_sites_ % 2 == 0; }
    /// Target site B: N on a line, N/2 + 1 on an even cycle. Throws on odd cycles.
    std::size_t target_site() const;

    /// Coin-major basis index of |coin, site>, site 1-based.
    std::size_t index(CoinBasis coin, std::size_t site) const;
    void check_site(std::size_t site) const;

    bool operator==(const Lattice &) const = default;

   private:
    Topology topology_;
    std::size_t n_sites_;
    Convention convention_;
};

std::string to_string(const Lattice &l);

/// Amplitudes over coin (x) position, plus the number of steps taken.
class WalkState {
   public:
    WalkState(Lattice lattice, Vector amplitudes, std::size_t step_count = 0);

    const Lattice &lattice() const { return lattice_; }
    const Vector &amplitudes() const { return amplitudes_; }
    std::size_t step_count() const { return step_count_; }

    Complex alpha(std::size_t site) const;
    Complex beta(std::size_t site) const;
    double norm() const { return amplitudes_.norm(); }

    /// Copy with every amplitude multiplied by e^{i gamma}.
    WalkState with_global_phase(double gamma) const;

   private:
    Lattice lattice_;
    Vector amplitudes_;
    std::size_t step_count_;
};

WalkState localized_state(const CoinState &coin, std::size_t site, const Lattice &lattice);

/// <a|b>, conjugate-linear in a.
Complex inner_product(const WalkState &a, const WalkState &b);

/// Dense unitary acting on the 2N-dimensional walk space.
class UnitaryOperator {
   public:
    /// Throws unless max|M^dagger M - I| < tolerance.
    UnitaryOperator(Lattice lattice, Matrix matrix, double tolerance = 1e-12);

    const Lattice &lattice() const { return lattice_; }
    const Matrix &matrix() const { return matrix_; }
    std::size_t dimension() const { return static_cast<std::size_t>(matrix_.rows()); }

    /// max|M^dagger M - I|.
    double unitarity_residual() const;

    UnitaryOperator power(std::size_t t) const;

   private:
    Lattice lattice_;
    Matrix matrix_;
};

/// Product a*b: b acts first.
UnitaryOperator operator*(const UnitaryOperator &a, const UnitaryOperator &b);

double unitarity_residual(const Matrix &m);

}  // namespace qwalk

#endif
