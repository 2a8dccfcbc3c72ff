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

#include "sporadic/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sporadic/golden.hpp"

namespace sporadic {

namespace {

double resolve_tol(double tol) { return tol > 0 ? tol : default_tolerance(); }

int dimension_from_length(std::size_t n) {
    int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (d < 1 || static_cast<std::size_t>(d * d) != n) {
        throw std::invalid_argument("probability vector length " + std::to_string(n) + " is not a perfect square");
    }
    return d;
}

// Column c of a 2x2-block coordinate system: Bloch vector of a unit vector
// with coordinates (c0, c1) in an orthonormal basis of a plane.
std::array<double, 3> bloch_of(Complex c0, Complex c1) {
    Complex cross = std::conj(c0) * c1;
    return {2 * cross.real(), 2 * cross.imag(), std::norm(c0) - std::norm(c1)};
}

double det3(const std::array<double, 3> &a, const std::array<double, 3> &b, const std::array<double, 3> &c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

SubspaceReport subspace_report(std::span<const StateVector> family, const StateVector &probe, double zero_tol) {
    SubspaceReport report;
    std::vector<StateVector> members;
    for (std::size_t i = 0; i < family.size(); i++) {
        if (fidelity(family[i], probe) < zero_tol) {
            report.indices.push_back(i);
            members.push_back(family[i].normalized());
        }
    }
    if (members.empty()) {
        return report;
    }
    report.span_rank = vector_span_rank(members);
    for (std::size_t i = 0; i < members.size(); i++) {
        for (std::size_t j = i + 1; j < members.size(); j++) {
            report.pairwise_fidelity.push_back(fidelity(members[i], members[j]));
        }
    }
    if (members.size() < 2) {
        return report;
    }
    // Gram-Schmidt basis of the plane spanned by the first two members.
    StateVector b0 = members[0];
    std::vector<Complex> rest(b0.dim());
    Complex proj = inner(b0, members[1]);
    for (std::size_t k = 0; k < rest.size(); k++) {
        rest[k] = members[1][k] - proj * b0[k];
    }
    StateVector b1 = StateVector(rest).normalized();
    for (const auto &m : members) {
        report.bloch.push_back(bloch_of(inner(b0, m), inner(b1, m)));
    }
    if (report.bloch.size() >= 3) {
        report.coplanarity = std::abs(det3(report.bloch[0], report.bloch[1], report.bloch[2]));
    }
    return report;
}

StateVector from_coordinates(std::span<const double> x) {
    std::vector<Complex> amps(x.size() / 2);
    for (std::size_t k = 0; k < amps.size(); k++) {
        amps[k] = Complex{x[2 * k], x[2 * k + 1]};
    }
    return StateVector(std::move(amps));
}

std::vector<double> to_coordinates(const StateVector &s) {
    std::vector<double> x;
    x.reserve(2 * s.dim());
    for (const auto &a : s.amplitudes()) {
        x.push_back(a.real());
        x.push_back(a.imag());
    }
    return x;
}

class EntropyObjective {
   public:
    explicit EntropyObjective(const SicEnsemble &e) : e_(e), d_(e.d()) {}

    double operator()(std::span<const double> x) const {
        double norm2 = 0;
        for (double v : x) {
            norm2 += v * v;
        }
        if (!(norm2 > 0)) {
            return std::numeric_limits<double>::infinity();
        }
        double h = 0;
        for (const auto &s : e_.states()) {
            Complex ov = 0;
            for (int k = 0; k < d_; k++) {
                ov += std::conj(s[k]) * Complex{x[2 * k], x[2 * k + 1]};
            }
            double p = std::norm(ov) / (norm2 * d_);
            if (p > 0) {
                h -= p * std::log2(p);
            }
        }
        return h;
    }

   private:
    const SicEnsemble &e_;
    int d_;
};

void normalize_in_place(std::vector<double> &x) {
    double n = 0;
    for (double v : x) {
        n += v * v;
    }
    n = std::sqrt(n);
    if (n > 0) {
        for (double &v : x) {
            v /= n;
        }
    }
}

// Nelder-Mead with dimension-adaptive coefficients; every trial point is
// projected back onto the unit sphere.
std::pair<std::vector<double>, double> nelder_mead(const EntropyObjective &f, std::vector<double> start, double step,
                                                   int max_evals) {
    const std::size_t n = start.size();
    const double nd = static_cast<double>(n);
    const double alpha = 1.0;
    const double gamma = 1.0 + 2.0 / nd;
    const double rho = 0.75 - 1.0 / (2.0 * nd);
    const double sigma = 1.0 - 1.0 / nd;

    normalize_in_place(start);
    std::vector<std::vector<double>> simplex(n + 1, start);
    std::vector<double> values(n + 1);
    for (std::size_t k = 0; k < n; k++) {
        simplex[k + 1][k] += step;
        normalize_in_place(simplex[k + 1]);
    }
    int evals = 0;
    for (std::size_t k = 0; k <= n; k++) {
        values[k] = f(simplex[k]);
        evals++;
    }
    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);

    auto point_along = [&](double t, std::vector<double> &out, const std::vector<double> &worst) {
        for (std::size_t k = 0; k < n; k++) {
            out[k] = centroid[k] + t * (worst[k] - centroid[k]);
        }
        normalize_in_place(out);
    };

    while (evals < max_evals) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[n - 1];

        double spread = values[worst] - values[best];
        double diameter = 0;
        for (std::size_t k = 0; k <= n; k++) {
            for (std::size_t j = 0; j < n; j++) {
                diameter = std::max(diameter, std::abs(simplex[k][j] - simplex[best][j]));
            }
        }
        if (spread <= 1e-15 && diameter <= 1e-11) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t k = 0; k <= n; k++) {
            if (k == worst) {
                continue;
            }
            for (std::size_t j = 0; j < n; j++) {
                centroid[j] += simplex[k][j] / nd;
            }
        }

        point_along(-alpha, trial, simplex[worst]);
        double f_reflect = f(trial);
        evals++;
        if (f_reflect < values[best]) {
            point_along(-alpha * gamma, trial2, simplex[worst]);
            double f_expand = f(trial2);
            evals++;
            if (f_expand < f_reflect) {
                simplex[worst] = trial2;
                values[worst] = f_expand;
            } else {
                simplex[worst] = trial;
                values[worst] = f_reflect;
            }
            continue;
        }
        if (f_reflect < values[second_worst]) {
            simplex[worst] = trial;
            values[worst] = f_reflect;
            continue;
        }
        bool outside = f_reflect < values[worst];
        point_along(outside ? -alpha * rho : rho, trial2, simplex[worst]);
        double f_contract = f(trial2);
        evals++;
        if (f_contract < std::min(f_reflect, values[worst])) {
            simplex[worst] = trial2;
            values[worst] = f_contract;
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t k = 0; k <= n; k++) {
            if (k == best) {
                continue;
            }
            for (std::size_t j = 0; j < n; j++) {
                simplex[k][j] = simplex[best][j] + (1 - sigma) * (simplex[k][j] - simplex[best][j]);
            }
            normalize_in_place(simplex[k]);
            values[k] = f(simplex[k]);
            evals++;
        }
    }
    auto it = std::min_element(values.begin(), values.end());
    return {simplex[static_cast<std::size_t>(it - values.begin())], *it};
}

const std::array<std::string, 4> kTable1Rows = {
    "1110111011100001111011101110000111101110111000010001000100011110",
    "1101110111010010110111011101001011011101110100100010001000101101",
    "1011101110110100101110111011010010111011101101000100010001001011",
    "0111011101111000011101110111100001110111011110001000100010000111",
};

int overlap_count(const std::vector<int> &a, const std::vector<int> &b) {
    int s = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        s += a[k] & b[k];
    }
    return s;
}

std::map<int, int> column_type_histogram(const std::array<const std::vector<int> *, 4> &rows) {
    std::map<int, int> hist;
    for (std::size_t c = 0; c < rows[0]->size(); c++) {
        int type = 0;
        for (int r = 0; r < 4; r++) {
            type = (type << 1) | (*rows[r])[c];
        }
        hist[type]++;
    }
    return hist;
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) {
        throw std::invalid_argument("ProbabilityVector: empty");
    }
    double sum = 0;
    for (double v : p_) {
        if (!(v >= -kTolerance)) {
            throw std::invalid_argument("ProbabilityVector: negative entry " + std::to_string(v));
        }
        sum += v;
    }
    if (std::abs(sum - 1) > kTolerance) {
        throw std::invalid_argument("ProbabilityVector: entries sum to " + std::to_string(sum));
    }
}

ProbabilityVector represent(const SicEnsemble &e, const ComplexMatrix &rho, double tol) {
    double t = resolve_tol(tol);
    const auto d = static_cast<std::size_t>(e.d());
    if (!rho.is_square() || rho.rows() != d) {
        throw std::invalid_argument("represent: state has the wrong dimension");
    }
    if (hermitian_deviation(rho) > t || std::abs(rho.trace() - 1.0) > t) {
        throw std::invalid_argument("represent: input is not a unit-trace Hermitian matrix");
    }
    if (hermitian_eigenvalues(rho, t).back() < -t) {
        throw std::invalid_argument("represent: input is not positive semidefinite");
    }
    std::vector<double> p;
    p.reserve(e.size());
    for (const auto &pi : e.projectors()) {
        p.push_back(hs_inner(rho, pi).real() / static_cast<double>(d));
    }
    return ProbabilityVector(std::move(p));
}

ProbabilityVector represent(const SicEnsemble &e, const StateVector &psi) {
    StateVector s = psi.normalized();
    std::vector<double> p;
    p.reserve(e.size());
    for (const auto &pi : e.states()) {
        p.push_back(std::norm(inner(pi, s)) / e.d());
    }
    return ProbabilityVector(std::move(p));
}

ComplexMatrix reconstruct(const SicEnsemble &e, const ProbabilityVector &p) {
    if (p.size() != e.size()) {
        throw std::invalid_argument("reconstruct: probability vector length does not match the ensemble");
    }
    double d = e.d();
    ComplexMatrix rho(e.d(), e.d());
    for (std::size_t i = 0; i < p.size(); i++) {
        rho += e.projector(i) * Complex{(d + 1) * p[i] - 1 / d, 0};
    }
    return rho;
}

double shannon_entropy(std::span<const double> p) {
    double h = 0;
    for (double v : p) {
        if (v > 0) {
            h -= v * std::log2(v);
        }
    }
    return h;
}

double shannon_entropy(const ProbabilityVector &p) { return shannon_entropy(p.values()); }

PurityCheck purity_sum(const ProbabilityVector &p, double tol) {
    int d = dimension_from_length(p.size());
    double s = 0;
    for (double v : p.values()) {
        s += v * v;
    }
    double target = 2.0 / (d * (d + 1.0));
    return {s, target, std::abs(s - target) <= tol};
}

double n_eff(std::span<const double> p) {
    double s = 0;
    for (double v : p) {
        s += v * v;
    }
    if (s == 0) {
        throw std::invalid_argument("n_eff: all-zero vector");
    }
    return 1 / s;
}

std::int64_t n_eff_pure(int d) {
    if (d < 1) {
        throw std::invalid_argument("n_eff_pure: dimension must be positive");
    }
    return static_cast<std::int64_t>(d) * (d + 1) / 2;
}

std::int64_t max_zero_bound(int d, Field field) {
    if (d < 2) {
        throw std::invalid_argument("max_zero_bound: dimension must be at least 2");
    }
    std::int64_t dd = d;
    switch (field) {
        case Field::Complex:
            return dd * (dd - 1) / 2;
        case Field::Real:
            return (dd * dd - 1) / 3;
        case Field::Octonionic3:
            break;
    }
    throw std::invalid_argument("max_zero_bound: only real and complex fields are supported");
}

std::size_t count_zeros(std::span<const double> p, double tol) {
    return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [&](double v) { return v < tol; }));
}

bool AffinePlane9::incident(int point, int line) const {
    const auto &l = lines.at(static_cast<std::size_t>(line));
    return std::find(l.begin(), l.end(), point) != l.end();
}

AffinePlane9 affine_plane9() {
    AffinePlane9 plane{};
    plane.lines = {{{1, 2, 3}, {4, 5, 6}, {7, 8, 9},
                    {1, 4, 7}, {2, 5, 8}, {3, 6, 9},
                    {1, 5, 9}, {2, 6, 7}, {3, 4, 8},
                    {1, 6, 8}, {2, 4, 9}, {3, 5, 7}}};
    plane.parallel_classes = {{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}}};
    return plane;
}

MubDual mub_dual(const SicEnsemble &hesse, double tol) {
    if (hesse.d() != 3) {
        throw std::invalid_argument("mub_dual: expected the d = 3 ensemble");
    }
    double t = resolve_tol(tol);
    AffinePlane9 plane = affine_plane9();
    MubDual out;
    out.bases = plane.parallel_classes;
    for (std::size_t j = 0; j < plane.lines.size(); j++) {
        std::vector<double> p(9, 1.0 / 6.0);
        for (int point : plane.lines[j]) {
            p[static_cast<std::size_t>(point - 1)] = 0;
        }
        ProbabilityVector pv(std::move(p));
        ComplexMatrix rho = reconstruct(hesse, pv);
        double dev = max_abs_diff(rho * rho, rho);
        if (dev > t) {
            throw std::runtime_error("mub_dual: line " + std::to_string(j) + " does not reconstruct a pure state");
        }
        out.max_purity_deviation = std::max(out.max_purity_deviation, dev);
        out.states.push_back(state_from_projector(rho));
        out.probabilities.push_back(std::move(pv));
    }
    return out;
}

MubDual mub_dual() { return mub_dual(hesse_sic_orbit()); }

SicMubIncidence sic_mub_incidence(const SicEnsemble &hesse, const MubDual &mub, double zero_tol) {
    SicMubIncidence inc;
    inc.per_sic.assign(hesse.size(), 0);
    inc.per_mub.assign(mub.states.size(), 0);
    inc.orthogonal.assign(hesse.size(), std::vector<bool>(mub.states.size(), false));
    for (std::size_t i = 0; i < hesse.size(); i++) {
        for (std::size_t j = 0; j < mub.states.size(); j++) {
            if (fidelity(hesse.state(i), mub.states[j]) < zero_tol) {
                inc.orthogonal[i][j] = true;
                inc.per_sic[i]++;
                inc.per_mub[j]++;
                inc.total++;
            }
        }
    }
    return inc;
}

SubspaceReport trine_extract(const SicEnsemble &hesse, const StateVector &mub_state, double zero_tol) {
    SubspaceReport r = subspace_report(hesse.states(), mub_state, zero_tol);
    if (r.indices.size() != 3) {
        throw std::runtime_error("trine_extract: expected 3 orthogonal SIC states, found " +
                                 std::to_string(r.indices.size()));
    }
    return r;
}

SubspaceReport qubit_sic_from_dual(const MubDual &mub, const StateVector &sic_state, double zero_tol) {
    SubspaceReport r = subspace_report(mub.states, sic_state, zero_tol);
    if (r.indices.size() != 4) {
        throw std::runtime_error("qubit_sic_from_dual: expected 4 orthogonal MUB states, found " +
                                 std::to_string(r.indices.size()));
    }
    return r;
}

TwinIncidence twin_incidence(const SicEnsemble &plus, const SicEnsemble &minus, double zero_tol) {
    if (plus.d() != 8 || minus.d() != 8) {
        throw std::invalid_argument("twin_incidence: expected the two d = 8 ensembles");
    }
    const std::size_t n = plus.size();
    TwinIncidence t;
    t.zero_pattern.assign(n, std::vector<bool>(n, false));
    t.row_counts.assign(n, 0);
    t.column_counts.assign(n, 0);
    const double expected = 2.0 / 9.0;
    bool have_nonzero = false;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            double ov = std::norm(inner(plus.state(i), minus.state(j)));
            if (ov < zero_tol) {
                t.zero_pattern[i][j] = true;
                t.row_counts[i]++;
                t.column_counts[j]++;
            } else {
                if (!have_nonzero) {
                    t.nonzero_overlap = ov;
                    have_nonzero = true;
                }
                t.nonzero_overlap_spread = std::max(t.nonzero_overlap_spread, std::abs(ov - expected));
            }
        }
    }

    // tr(Pi0+ D Pi0- D^dagger), evaluated directly on the operators.
    ComplexMatrix p0_plus = plus.projector(0);
    ComplexMatrix p0_minus = hoggar_fiducial(Twin::Minus).projector();
    for (int v = 0; v < PauliLabel::kCount; v++) {
        ComplexMatrix d = three_qubit_pauli(PauliLabel(v));
        double tr = (p0_plus * d * p0_minus * d.adjoint()).trace().real();
        if (std::abs(tr) < zero_tol) {
            t.fiducial_zero_labels.emplace_back(v);
        }
    }
    t.fiducial_row_is_antisymmetric_set = t.fiducial_zero_labels == antisymmetric_labels();
    return t;
}

TwinIncidence twin_incidence() { return twin_incidence(hoggar_sic(Twin::Plus), hoggar_sic(Twin::Minus)); }

const std::array<std::string, 4> &table1_reference_rows() { return kTable1Rows; }

Table1Report table1_patterns(const SicEnsemble &plus, const SicEnsemble &minus) {
    const std::size_t n = minus.size();
    Table1Report rep;
    rep.rows.assign(n, std::vector<int>(plus.size(), 0));
    rep.row_weights.assign(n, 0);
    for (std::size_t i = 0; i < n; i++) {
        ProbabilityVector p = represent(plus, minus.state(i));
        for (std::size_t j = 0; j < p.size(); j++) {
            double scaled = 36 * p[j];
            double rounded = std::round(scaled);
            rep.max_binary_deviation = std::max(rep.max_binary_deviation, std::abs(scaled - rounded));
            if (rounded != 0 && rounded != 1) {
                rep.max_binary_deviation = std::max(rep.max_binary_deviation, 1.0);
            }
            rep.rows[i][j] = static_cast<int>(rounded);
            rep.row_weights[i] += static_cast<int>(rounded);
        }
    }

    std::array<std::vector<int>, 4> reference;
    for (int r = 0; r < 4; r++) {
        for (char c : kTable1Rows[r]) {
            reference[r].push_back(c - '0');
        }
    }
    const auto target = column_type_histogram({&reference[0], &reference[1], &reference[2], &reference[3]});
    int pair_overlap[4][4];
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            pair_overlap[a][b] = overlap_count(reference[a], reference[b]);
        }
    }

    // Ordered choice of four of our rows whose pairwise overlaps match, then
    // compare the multiset of 4-bit column types.
    const auto &rows = rep.rows;
    for (std::size_t a = 0; a < n && !rep.aligned; a++) {
        if (overlap_count(rows[a], rows[a]) != pair_overlap[0][0]) {
            continue;
        }
        for (std::size_t b = 0; b < n && !rep.aligned; b++) {
            if (b == a || overlap_count(rows[a], rows[b]) != pair_overlap[0][1]) {
                continue;
            }
            for (std::size_t c = 0; c < n && !rep.aligned; c++) {
                if (c == a || c == b || overlap_count(rows[a], rows[c]) != pair_overlap[0][2] ||
                    overlap_count(rows[b], rows[c]) != pair_overlap[1][2]) {
                    continue;
                }
                for (std::size_t e = 0; e < n && !rep.aligned; e++) {
                    if (e == a || e == b || e == c || overlap_count(rows[a], rows[e]) != pair_overlap[0][3] ||
                        overlap_count(rows[b], rows[e]) != pair_overlap[1][3] ||
                        overlap_count(rows[c], rows[e]) != pair_overlap[2][3]) {
                        continue;
                    }
                    if (column_type_histogram({&rows[a], &rows[b], &rows[c], &rows[e]}) != target) {
                        continue;
                    }
                    rep.aligned = true;
                    rep.matched_rows = {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c),
                                        static_cast<int>(e)};
                }
            }
        }
    }

    if (rep.aligned) {
        std::array<const std::vector<int> *, 4> ours;
        for (int r = 0; r < 4; r++) {
            ours[r] = &rows[static_cast<std::size_t>(rep.matched_rows[r])];
        }
        std::vector<bool> used(plus.size(), false);
        for (std::size_t col = 0; col < reference[0].size(); col++) {
            for (std::size_t cand = 0; cand < plus.size(); cand++) {
                bool same = !used[cand];
                for (int r = 0; r < 4 && same; r++) {
                    same = (*ours[r])[cand] == reference[r][col];
                }
                if (same) {
                    used[cand] = true;
                    rep.column_permutation.push_back(static_cast<int>(cand));
                    break;
                }
            }
        }
    }
    return rep;
}

Table1Report table1_patterns() { return table1_patterns(hoggar_sic(Twin::Plus), hoggar_sic(Twin::Minus)); }

std::vector<EntropyMinimum> entropy_min_search(const SicEnsemble &e, const SearchOptions &options) {
    if (options.restarts < 1) {
        throw std::invalid_argument("entropy_min_search: restarts must be at least 1");
    }
    EntropyObjective objective(e);
    std::vector<EntropyMinimum> found;
    for (int r = 0; r < options.restarts; r++) {
        std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(r));
        auto x = to_coordinates(random_pure_state(e.d(), rng));
        double fx = objective(x);
        double step = 0.25;
        for (int round = 0; round <= options.polish_rounds; round++) {
            auto [y, fy] = nelder_mead(objective, x, step, options.max_evaluations);
            if (fy <= fx) {
                x = std::move(y);
                fx = fy;
            }
            step *= 0.2;
        }
        StateVector s = from_coordinates(x).normalized();
        auto dup = std::find_if(found.begin(), found.end(), [&](const EntropyMinimum &m) {
            return fidelity(m.state, s) > options.dedup_fidelity;
        });
        if (dup == found.end()) {
            found.push_back({s, fx});
        } else if (fx < dup->entropy) {
            *dup = {s, fx};
        }
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const EntropyMinimum &a, const EntropyMinimum &b) { return a.entropy < b.entropy; });
    return found;
}

std::vector<EntropyMinimum> global_minimizers(std::span<const EntropyMinimum> minima, double slack) {
    std::vector<EntropyMinimum> out;
    if (minima.empty()) {
        return out;
    }
    double best = std::min_element(minima.begin(), minima.end(), [](const auto &a, const auto &b) {
                      return a.entropy < b.entropy;
                  })->entropy;
    for (const auto &m : minima) {
        if (m.entropy <= best + slack) {
            out.push_back(m);
        }
    }
    return out;
}

PerturbationReport perturbation_check(const SicEnsemble &e, const StateVector &state, int trials,
                                      std::uint64_t seed) {
    EntropyObjective objective(e);
    StateVector base = state.normalized();
    auto x0 = to_coordinates(base);
    PerturbationReport rep{objective(x0), std::numeric_limits<double>::infinity(), trials};
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> exponent(-6.0, -1.0);
    std::vector<double> x(x0.size());
    for (int t = 0; t < trials; t++) {
        std::vector<double> g(x0.size());
        for (double &v : g) {
            v = gauss(rng);
        }
        normalize_in_place(g);
        double eps = std::pow(10.0, exponent(rng));
        for (std::size_t k = 0; k < x.size(); k++) {
            x[k] = x0[k] + eps * g[k];
        }
        rep.lowest_perturbed_entropy = std::min(rep.lowest_perturbed_entropy, objective(x));
    }
    return rep;
}

StateVector random_pure_state(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(static_cast<std::size_t>(d));
    for (auto &a : amps) {
        double re = gauss(rng);
        double im = gauss(rng);
        a = Complex{re, im};
    }
    return StateVector(std::move(amps)).normalized();
}

ComplexMatrix random_mixed_state(int d, std::mt19937_64 &rng) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> spectrum(static_cast<std::size_t>(d));
    double total = 0;
    for (double &v : spectrum) {
        v = expo(rng);
        total += v;
    }
    // Columns of a random unitary by Gram-Schmidt on Gaussian vectors.
    std::vector<StateVector> cols;
    while (cols.size() < static_cast<std::size_t>(d)) {
        StateVector v = random_pure_state(d, rng);
        std::vector<Complex> w(v.amplitudes().begin(), v.amplitudes().end());
        for (const auto &c : cols) {
            Complex proj = inner(c, v);
            for (int k = 0; k < d; k++) {
                w[static_cast<std::size_t>(k)] -= proj * c[static_cast<std::size_t>(k)];
            }
        }
        StateVector u(std::move(w));
        if (u.norm() > 1e-8) {
            cols.push_back(u.normalized());
        }
    }
    ComplexMatrix rho(d, d);
    for (std::size_t k = 0; k < cols.size(); k++) {
        rho += cols[k].projector() * Complex{spectrum[k] / total, 0};
    }
    return rho;
}

std::vector<std::int64_t> fibonacci_lucas_dims(int k_max) {
    if (k_max < 1) {
        throw std::invalid_argument("fibonacci_lucas_dims: k_max must be at least 1");
    }
    const GoldenScalar phi = GoldenScalar::phi();
    std::vector<std::int64_t> out;
    for (int k = 1; k <= k_max; k++) {
        GoldenScalar v = pow(phi, 2 * k) + pow(phi, -2 * k) + GoldenScalar(1);
        if (!v.is_integer()) {
            throw std::logic_error("fibonacci_lucas_dims: non-integer value " + v.to_string());
        }
        out.push_back(static_cast<std::int64_t>(numerator(v.rational_part())));
    }
    return out;
}

}  // namespace sporadic
