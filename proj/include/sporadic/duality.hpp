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

#ifndef SPORADIC_DUALITY_HPP
#define SPORADIC_DUALITY_HPP

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sporadic/field.hpp"
#include "sporadic/matrix.hpp"
#include "sporadic/pauli.hpp"
#include "sporadic/sic.hpp"

namespace sporadic {

/// Nonnegative weights summing to one (both to within 1e-12).
class ProbabilityVector {
   public:
    static constexpr double kTolerance = 1e-12;

    ProbabilityVector() = default;
    explicit ProbabilityVector(std::vector<double> p);

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    std::span<const double> values() const { return p_; }

   private:
    std::vector<double> p_;
};

/// p(i) = tr(rho Pi_i) / d. Throws std::invalid_argument if rho is not a density matrix.
ProbabilityVector represent(const SicEnsemble &e, const ComplexMatrix &rho, double tol = -1.0);
/// The same for a pure state, without forming |psi><psi|.
ProbabilityVector represent(const SicEnsemble &e, const StateVector &psi);
/// rho = sum_i [(d+1) p(i) - 1/d] Pi_i.
ComplexMatrix reconstruct(const SicEnsemble &e, const ProbabilityVector &p);

/// Shannon entropy in bits with 0 log 0 = 0.
double shannon_entropy(const ProbabilityVector &p);
double shannon_entropy(std::span<const double> p);

struct PurityCheck {
    double sum_squares;
    double pure_value;  ///< 2 / (d (d + 1))
    bool pure;
};
/// Sum of p(i)^2 compared with the pure-state value; d is inferred from the length d^2.
PurityCheck purity_sum(const ProbabilityVector &p, double tol = 1e-12);

/// (sum p^2)^-1. Throws on an all-zero vector.
double n_eff(std::span<const double> p);
/// binom(d + 1, 2).
std::int64_t n_eff_pure(int d);

/// Largest possible number of zero outcome probabilities for a pure state:
/// d(d-1)/2 over C, floor((d^2 - 1)/3) over R.
std::int64_t max_zero_bound(int d, Field field);

inline constexpr double kZeroThreshold = 1e-9;
std::size_t count_zeros(std::span<const double> p, double tol = kZeroThreshold);

/// The affine plane of order 3 on the grid points 1..9, its 12 lines in the
/// order (123)(456)(789)(147)(258)(369)(159)(267)(348)(168)(249)(357), and
/// the four parallel classes as consecutive triples of line indices.
struct AffinePlane9 {
    std::array<std::array<int, 3>, 12> lines;
    std::array<std::array<int, 3>, 4> parallel_classes;

    bool incident(int point, int line) const;
};
AffinePlane9 affine_plane9();

/// Twelve MUB states from the Hesse SIC: state j is reconstructed from the
/// probability vector vanishing on line j and uniform (1/6) elsewhere.
struct MubDual {
    std::vector<StateVector> states;
    std::vector<ProbabilityVector> probabilities;
    std::array<std::array<int, 3>, 4> bases;  ///< indices into states, one triple per parallel class
    double max_purity_deviation = 0;          ///< max |rho^2 - rho| over the reconstructions
};
/// Throws std::runtime_error if a reconstruction is not a rank-one projector.
MubDual mub_dual(const SicEnsemble &hesse, double tol = -1.0);
MubDual mub_dual();

struct SicMubIncidence {
    std::vector<std::vector<bool>> orthogonal;  ///< [sic][mub]
    std::vector<int> per_sic;
    std::vector<int> per_mub;
    int total = 0;
};
SicMubIncidence sic_mub_incidence(const SicEnsemble &hesse, const MubDual &mub, double zero_tol = kZeroThreshold);

/// Lines orthogonal to a given state, viewed inside the qubit they span.
struct SubspaceReport {
    std::vector<std::size_t> indices;     ///< members of the searched family orthogonal to the probe
    std::size_t span_rank = 0;            ///< complex dimension spanned by their vectors
    std::vector<double> pairwise_fidelity;
    std::vector<std::array<double, 3>> bloch;  ///< Bloch vectors in an orthonormal basis of the span
    double coplanarity = 0;               ///< |det| of the Bloch vectors (first three)
};

/// The Hesse states orthogonal to a MUB state; expected to be a trine.
/// Throws std::runtime_error unless exactly three are found.
SubspaceReport trine_extract(const SicEnsemble &hesse, const StateVector &mub_state, double zero_tol = kZeroThreshold);
/// The MUB states orthogonal to a Hesse state; expected to be a qubit SIC.
/// Throws std::runtime_error unless exactly four are found.
SubspaceReport qubit_sic_from_dual(const MubDual &mub, const StateVector &sic_state, double zero_tol = kZeroThreshold);

struct TwinIncidence {
    std::vector<std::vector<bool>> zero_pattern;  ///< [plus label][minus label], true = orthogonal
    std::vector<int> row_counts;
    std::vector<int> column_counts;
    double nonzero_overlap = 0;           ///< common value of tr(Pi+ Pi-) off the zero pattern
    double nonzero_overlap_spread = 0;    ///< max |value - 2/9|
    std::vector<PauliLabel> fiducial_zero_labels;  ///< labels D with tr(Pi0+ D Pi0- D^dagger) = 0
    bool fiducial_row_is_antisymmetric_set = false;
};
TwinIncidence twin_incidence(const SicEnsemble &plus, const SicEnsemble &minus, double zero_tol = kZeroThreshold);
TwinIncidence twin_incidence();

/// The four published reference rows, as 0/1 strings of length 64.
const std::array<std::string, 4> &table1_reference_rows();

struct Table1Report {
    std::vector<std::vector<int>> rows;  ///< [minus label][plus label], 36 p rounded
    double max_binary_deviation = 0;
    std::vector<int> row_weights;
    bool aligned = false;                ///< a single column permutation matches all four reference rows
    std::array<int, 4> matched_rows{-1, -1, -1, -1};
    std::vector<int> column_permutation; ///< reference column c equals our column column_permutation[c]
};
Table1Report table1_patterns(const SicEnsemble &plus, const SicEnsemble &minus);
Table1Report table1_patterns();

struct EntropyMinimum {
    StateVector state;
    double entropy;
};

struct SearchOptions {
    int restarts = 64;
    std::uint64_t seed = 0;
    int max_evaluations = 20000;  ///< per Nelder-Mead run
    int polish_rounds = 6;        ///< simplex rebuilds around the incumbent
    double dedup_fidelity = 1 - 1e-6;
};

/// Random-restart Nelder-Mead over pure states, minimizing the Shannon entropy
/// of the SIC representation. Restart k draws its start from a generator seeded
/// with seed + k, so the result does not depend on restart order. Returns the
/// projectively distinct local minima, sorted by entropy.
std::vector<EntropyMinimum> entropy_min_search(const SicEnsemble &e, const SearchOptions &options);

/// Minima whose entropy is within slack of the lowest one.
std::vector<EntropyMinimum> global_minimizers(std::span<const EntropyMinimum> minima, double slack = 1e-6);

struct PerturbationReport {
    double base_entropy;
    double lowest_perturbed_entropy;
    int trials;
};
/// Samples random perturbations with magnitudes log-uniform in [1e-6, 1e-1].
PerturbationReport perturbation_check(const SicEnsemble &e, const StateVector &state, int trials, std::uint64_t seed);

/// Haar-random pure state.
StateVector random_pure_state(int d, std::mt19937_64 &rng);
/// Random full-rank density matrix: random spectrum conjugated by a random unitary.
ComplexMatrix random_mixed_state(int d, std::mt19937_64 &rng);

/// phi^{2k} + phi^{-2k} + 1 for k = 1..k_max, computed in the golden field.
/// Throws std::logic_error if a value is not a rational integer.
std::vector<std::int64_t> fibonacci_lucas_dims(int k_max);

}  // namespace sporadic

#endif
