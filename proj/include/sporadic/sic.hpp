// Copyright 2026 The Sporadic SIC Authors
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

#ifndef SPORADIC_SIC_HPP
#define SPORADIC_SIC_HPP

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sporadic/certificate.hpp"
#include "sporadic/matrix.hpp"

namespace sporadic {

/// Which of the two twin ensembles in dimensions 2 and 8.
enum class Twin { Plus, Minus };

/// d^2 rank-one projectors in dimension d plus the unit vectors they project
/// onto. The SIC axioms are not enforced here; verify_sic checks them.
class SicEnsemble {
   public:
    SicEnsemble(int d, std::vector<ComplexMatrix> projectors, std::string provenance);
    SicEnsemble(int d, std::vector<StateVector> states, std::string provenance);

    int d() const { return d_; }
    std::size_t size() const { return projectors_.size(); }
    const std::string &provenance() const { return provenance_; }
    const std::vector<ComplexMatrix> &projectors() const { return projectors_; }
    const std::vector<StateVector> &states() const { return states_; }
    const ComplexMatrix &projector(std::size_t i) const { return projectors_.at(i); }
    const StateVector &state(std::size_t i) const { return states_.at(i); }

    /// Real Gram matrix tr(P_i P_j).
    ComplexMatrix gram() const;

   private:
    int d_;
    std::vector<ComplexMatrix> projectors_;
    std::vector<StateVector> states_;
    std::string provenance_;
};

/// Thrown when a group orbit yields fewer than d^2 distinct lines.
class OrbitCollapse : public std::runtime_error {
   public:
    OrbitCollapse(std::size_t first, std::size_t second);
    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

   private:
    std::size_t first_;
    std::size_t second_;
};

/// Fidelity above which two orbit points count as the same line.
inline constexpr double kOrbitCollisionFidelity = 1 - 1e-8;

/// rho = (I + x sigma_x + y sigma_y + z sigma_z) / 2.
ComplexMatrix bloch_to_density(double x, double y, double z, double tol = -1.0);
/// Inverse Bloch map for a 2x2 matrix: (tr rho sigma_x, tr rho sigma_y, tr rho sigma_z).
std::array<double, 3> density_to_bloch(const ComplexMatrix &rho);

/// Tetrahedral qubit SIC with Bloch vectors (s, s', +-ss')/sqrt(3), ordered
/// (s, s') = (+,+), (+,-), (-,+), (-,-).
SicEnsemble qubit_sic(Twin twin);

/// Coxeter's nine homogeneous vectors over {1, w, w^2}, divided by sqrt(2),
/// in row-major order of the three-by-three table.
std::vector<StateVector> coxeter_hesse_vectors(bool normalized);
SicEnsemble hesse_sic_coxeter();
/// Orbit of (0, 1, -1)/sqrt(2) under the d = 3 displacements, (l, alpha) order.
SicEnsemble hesse_sic_orbit();

struct HessianVertex {
    std::string symbol;  ///< Segre symbol, digits in 1..3 or '0'.
    StateVector vector;
};

/// The 27 vertices (0, w^mu, -w^nu), (-w^nu, 0, w^mu), (w^mu, -w^nu, 0) with
/// mu, nu in 1..3, tagged with the symbols 0mu nu, nu 0 mu, mu nu 0.
std::vector<HessianVertex> hessian_polyhedron();
/// Groups vertex indices into lines through the origin (scalar multiples).
std::vector<std::vector<std::size_t>> hessian_diameters(std::span<const HessianVertex> vertices);

struct AdjacencyReport {
    std::size_t pairs_checked = 0;
    std::vector<double> distinct_values;  ///< distinct Re<u,v> over cross-diameter pairs
    double value_agree_one = 0;           ///< Re<u,v> for symbols agreeing in exactly one place
    double value_agree_other = 0;         ///< Re<u,v> for symbols agreeing in two places or none
    bool partitions_coincide = false;
    double max_deviation = 0;             ///< spread within each value class
};

/// Checks that Re<u, v> on distinct diameters is two-valued and that the two
/// classes are exactly the Segre-symbol agreement classes.
AdjacencyReport hessian_adjacency_classes(double tol = -1.0);

/// (-1 +- 2i, 1, 1, 1, 1, 1, 1, 1)^T / sqrt(12).
StateVector hoggar_fiducial(Twin twin);
/// Orbit of the fiducial under all 64 three-qubit Paulis, indexed by label.
SicEnsemble hoggar_sic(Twin twin);

/// Orbit of a fiducial under the given operators, in operator order. Throws
/// OrbitCollapse naming the first colliding pair when the orbit has fewer than
/// d^2 distinct lines, and std::invalid_argument if there are not d^2 operators.
SicEnsemble orbit_sic(const StateVector &fiducial, std::span<const ComplexMatrix> operators, std::string provenance);

/// Projector idempotence, unit trace, Gram condition, effect sum and operator rank.
Certificate verify_sic(const SicEnsemble &e, double tol = -1.0);

struct MatchedPair {
    std::size_t left;
    std::size_t right;
    double fidelity;
};

/// Greedy one-to-one matching of each left state to the highest-fidelity
/// unused right state. Sizes must agree.
std::vector<MatchedPair> fidelity_matching(std::span<const StateVector> left, std::span<const StateVector> right);

}  // namespace sporadic

#endif
