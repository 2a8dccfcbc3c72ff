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

#include "sporadic/sic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sporadic/pauli.hpp"

namespace sporadic {

namespace {

double resolve_tol(double tol) { return tol > 0 ? tol : default_tolerance(); }

Complex omega_power(int k) { return std::polar(1.0, 2 * std::numbers::pi * (((k % 3) + 3) % 3) / 3.0); }

void require_square_count(int d, std::size_t n) {
    if (d < 1 || n != static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {
        throw std::invalid_argument("SicEnsemble: expected d^2 = " + std::to_string(d * d) + " elements, got " +
                                    std::to_string(n));
    }
}

}  // namespace

SicEnsemble::SicEnsemble(int d, std::vector<ComplexMatrix> projectors, std::string provenance)
    : d_(d), projectors_(std::move(projectors)), provenance_(std::move(provenance)) {
    require_square_count(d, projectors_.size());
    states_.reserve(projectors_.size());
    for (const auto &p : projectors_) {
        if (p.rows() != static_cast<std::size_t>(d) || !p.is_square()) {
            throw std::invalid_argument("SicEnsemble: projector has wrong shape");
        }
        states_.push_back(state_from_projector(p));
    }
}

SicEnsemble::SicEnsemble(int d, std::vector<StateVector> states, std::string provenance)
    : d_(d), states_(std::move(states)), provenance_(std::move(provenance)) {
    require_square_count(d, states_.size());
    projectors_.reserve(states_.size());
    for (auto &s : states_) {
        if (s.dim() != static_cast<std::size_t>(d)) {
            throw std::invalid_argument("SicEnsemble: state has wrong dimension");
        }
        s = s.normalized();
        projectors_.push_back(s.projector());
    }
}

ComplexMatrix SicEnsemble::gram() const {
    std::size_t n = size();
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            double v = hs_inner(projectors_[i], projectors_[j]).real();
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

OrbitCollapse::OrbitCollapse(std::size_t first, std::size_t second)
    : std::runtime_error("orbit collapse: elements " + std::to_string(first) + " and " + std::to_string(second) +
                         " describe the same line"),
      first_(first),
      second_(second) {}

ComplexMatrix bloch_to_density(double x, double y, double z, double tol) {
    double r2 = x * x + y * y + z * z;
    if (r2 > 1 + resolve_tol(tol)) {
        throw std::invalid_argument("bloch_to_density: vector lies outside the unit ball");
    }
    ComplexMatrix rho = pauli_matrices::identity() + x * pauli_matrices::x() + y * pauli_matrices::y() + z * pauli_matrices::z();
    return rho * Complex{0.5, 0};
}

std::array<double, 3> density_to_bloch(const ComplexMatrix &rho) {
    if (rho.rows() != 2 || !rho.is_square()) {
        throw std::invalid_argument("density_to_bloch: expected a 2x2 matrix");
    }
    return {hs_inner(pauli_matrices::x(), rho).real(), hs_inner(pauli_matrices::y(), rho).real(),
            hs_inner(pauli_matrices::z(), rho).real()};
}

SicEnsemble qubit_sic(Twin twin) {
    double t = twin == Twin::Plus ? 1.0 : -1.0;
    double r = 1 / std::sqrt(3.0);
    std::vector<ComplexMatrix> projectors;
    for (int s : {1, -1}) {
        for (int sp : {1, -1}) {
            projectors.push_back(bloch_to_density(s * r, sp * r, t * s * sp * r));
        }
    }
    return SicEnsemble(2, std::move(projectors), twin == Twin::Plus ? "qubit-plus" : "qubit-minus");
}

std::vector<StateVector> coxeter_hesse_vectors(bool normalized) {
    std::vector<StateVector> out;
    for (int row = 0; row < 3; row++) {
        Complex w = omega_power(row);
        out.push_back(StateVector{0, 1, -w});
        out.push_back(StateVector{-w, 0, 1});
        out.push_back(StateVector{1, -w, 0});
    }
    if (normalized) {
        for (auto &v : out) {
            v = v.normalized();
        }
    }
    return out;
}

SicEnsemble hesse_sic_coxeter() { return SicEnsemble(3, coxeter_hesse_vectors(true), "hesse-coxeter"); }

SicEnsemble hesse_sic_orbit() {
    auto ops = all_displacements(3);
    StateVector fiducial = StateVector{0, 1, -1}.normalized();
    return orbit_sic(fiducial, ops, "hesse-orbit");
}

std::vector<HessianVertex> hessian_polyhedron() {
    std::vector<HessianVertex> out;
    for (int mu = 1; mu <= 3; mu++) {
        for (int nu = 1; nu <= 3; nu++) {
            Complex a = omega_power(mu);
            Complex b = omega_power(nu);
            std::string m(1, static_cast<char>('0' + mu));
            std::string n(1, static_cast<char>('0' + nu));
            out.push_back({"0" + m + n, StateVector{0, a, -b}});
            out.push_back({n + "0" + m, StateVector{-b, 0, a}});
            out.push_back({m + n + "0", StateVector{a, -b, 0}});
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> hessian_diameters(std::span<const HessianVertex> vertices) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < vertices.size(); i++) {
        bool placed = false;
        for (auto &cls : classes) {
            if (fidelity(vertices[cls.front()].vector, vertices[i].vector) > kOrbitCollisionFidelity) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({i});
        }
    }
    return classes;
}

AdjacencyReport hessian_adjacency_classes(double tol) {
    double t = resolve_tol(tol);
    auto vertices = hessian_polyhedron();
    auto diameters = hessian_diameters(vertices);
    std::vector<std::size_t> diameter_of(vertices.size());
    for (std::size_t c = 0; c < diameters.size(); c++) {
        for (auto i : diameters[c]) {
            diameter_of[i] = c;
        }
    }

    AdjacencyReport report;
    std::vector<double> agree_one;
    std::vector<double> agree_other;
    for (std::size_t i = 0; i < vertices.size(); i++) {
        for (std::size_t j = i + 1; j < vertices.size(); j++) {
            if (diameter_of[i] == diameter_of[j]) {
                continue;
            }
            report.pairs_checked++;
            int agreements = 0;
            for (int k = 0; k < 3; k++) {
                agreements += vertices[i].symbol[k] == vertices[j].symbol[k];
            }
            double v = inner(vertices[i].vector, vertices[j].vector).real();
            (agreements == 1 ? agree_one : agree_other).push_back(v);
            bool known = std::any_of(report.distinct_values.begin(), report.distinct_values.end(),
                                     [&](double u) { return std::abs(u - v) <= t; });
            if (!known) {
                report.distinct_values.push_back(v);
            }
        }
    }
    std::sort(report.distinct_values.begin(), report.distinct_values.end());

    auto spread = [](const std::vector<double> &vals) {
        auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
        return *hi - *lo;
    };
    if (!agree_one.empty() && !agree_other.empty()) {
        report.value_agree_one = agree_one.front();
        report.value_agree_other = agree_other.front();
        report.max_deviation = std::max(spread(agree_one), spread(agree_other));
        report.partitions_coincide = report.distinct_values.size() == 2 && report.max_deviation <= t &&
                                     std::abs(report.value_agree_one - report.value_agree_other) > t;
    }
    return report;
}

StateVector hoggar_fiducial(Twin twin) {
    double s = twin == Twin::Plus ? 2.0 : -2.0;
    return StateVector{Complex{-1, s}, 1, 1, 1, 1, 1, 1, 1}.normalized();
}

SicEnsemble hoggar_sic(Twin twin) {
    auto ops = all_three_qubit_paulis();
    return orbit_sic(hoggar_fiducial(twin), ops, twin == Twin::Plus ? "hoggar-plus" : "hoggar-minus");
}

SicEnsemble orbit_sic(const StateVector &fiducial, std::span<const ComplexMatrix> operators, std::string provenance) {
    int d = static_cast<int>(fiducial.dim());
    require_square_count(d, operators.size());
    StateVector seed = fiducial.normalized();
    std::vector<StateVector> states;
    states.reserve(operators.size());
    for (const auto &op : operators) {
        states.push_back(op * seed);
    }
    for (std::size_t i = 0; i < states.size(); i++) {
        for (std::size_t j = i + 1; j < states.size(); j++) {
            if (fidelity(states[i], states[j]) > kOrbitCollisionFidelity) {
                throw OrbitCollapse(i, j);
            }
        }
    }
    return SicEnsemble(d, std::move(states), std::move(provenance));
}

Certificate verify_sic(const SicEnsemble &e, double tol) {
    double t = resolve_tol(tol);
    int d = e.d();
    std::size_t n = e.size();
    Certificate cert(e.provenance());

    cert.add_exact("projector-count", n == static_cast<std::size_t>(d * d));

    double idem = 0;
    double trace_dev = 0;
    double herm = 0;
    ComplexMatrix effect_sum(d, d);
    for (const auto &p : e.projectors()) {
        idem = std::max(idem, max_abs_diff(p * p, p));
        trace_dev = std::max(trace_dev, std::abs(p.trace() - 1.0));
        herm = std::max(herm, hermitian_deviation(p));
        effect_sum += p * Complex{1.0 / d, 0};
    }
    cert.add("projector-hermitian", herm, t);
    cert.add("projector-idempotence", idem, t);
    cert.add("projector-unit-trace", trace_dev, t);

    double gram_dev = 0;
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = j; k < n; k++) {
            double expected = ((j == k ? d : 0) + 1.0) / (d + 1.0);
            gram_dev = std::max(gram_dev, std::abs(hs_inner(e.projector(j), e.projector(k)) - expected));
        }
    }
    cert.add("gram-condition", gram_dev, t);
    cert.add("effect-sum-identity", max_abs_diff(effect_sum, ComplexMatrix::identity(d)), t);
    cert.add_exact("operator-rank", operator_rank(e.projectors(), t) == static_cast<std::size_t>(d * d));
    return cert;
}

std::vector<MatchedPair> fidelity_matching(std::span<const StateVector> left, std::span<const StateVector> right) {
    if (left.size() != right.size()) {
        throw std::invalid_argument("fidelity_matching: sets differ in size");
    }
    std::vector<bool> used(right.size(), false);
    std::vector<MatchedPair> out;
    out.reserve(left.size());
    for (std::size_t i = 0; i < left.size(); i++) {
        std::size_t best = right.size();
        double best_f = -1;
        for (std::size_t j = 0; j < right.size(); j++) {
            if (used[j]) {
                continue;
            }
            double f = fidelity(left[i], right[j]);
            if (f > best_f) {
                best_f = f;
                best = j;
            }
        }
        used[best] = true;
        out.push_back({i, best, best_f});
    }
    return out;
}

}  // namespace sporadic
