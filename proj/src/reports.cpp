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

#include "sporadic/reports.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "sporadic/duality.hpp"
#include "sporadic/lines.hpp"
#include "sporadic/pauli.hpp"

namespace sporadic {

namespace {

struct FamilyName {
    Family family;
    const char *name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::QubitPlus, "qubit-plus"},       {Family::QubitMinus, "qubit-minus"},
    {Family::HesseCoxeter, "hesse-coxeter"}, {Family::HesseOrbit, "hesse-orbit"},
    {Family::HoggarPlus, "hoggar-plus"},     {Family::HoggarMinus, "hoggar-minus"},
    {Family::MubDual, "mub-dual"},           {Family::TwinIncidence, "twin-incidence"},
    {Family::Fano28, "fano-28"},             {Family::So828, "so8-28"},
    {Family::Icosahedron, "icosahedron"},    {Family::TrineR2, "trine-r2"},
    {Family::Bounds, "bounds"},
};

// Mixed states used only to exercise represent/reconstruct; the validation
// inside represent uses the library default, the reported deviation the
// configured tolerance.
constexpr int kRandomStates = 8;

template <typename Range, typename F>
bool all_of(const Range &r, F f) {
    return std::all_of(std::begin(r), std::end(r), f);
}

StateVector orthogonal_qubit_state(const StateVector &s) { return StateVector{-std::conj(s[1]), std::conj(s[0])}; }

void add_sic_suite(Certificate &cert, const SicEnsemble &e, double tol, std::uint64_t seed) {
    cert.merge(verify_sic(e, tol));
    const int d = e.d();
    std::mt19937_64 rng(seed);
    double round_trip = 0;
    for (int k = 0; k < kRandomStates; k++) {
        ComplexMatrix rho = random_mixed_state(d, rng);
        round_trip = std::max(round_trip, max_abs_diff(reconstruct(e, represent(e, rho)), rho));
    }
    cert.add("represent-reconstruct-round-trip", round_trip, tol);

    double purity = 0;
    double neff = 0;
    for (int k = 0; k < kRandomStates; k++) {
        ProbabilityVector p = represent(e, random_pure_state(d, rng));
        PurityCheck pc = purity_sum(p);
        purity = std::max(purity, std::abs(pc.sum_squares - pc.pure_value));
        neff = std::max(neff, std::abs(n_eff(p.values()) - static_cast<double>(n_eff_pure(d))));
    }
    cert.add("purity-sum-pure-states", purity, tol);
    cert.add("n-eff-pure-states", neff, tol * n_eff_pure(d));
}

void verify_qubit(Certificate &cert, Twin twin, double tol, std::uint64_t seed) {
    SicEnsemble e = qubit_sic(twin);
    add_sic_suite(cert, e, tol, seed);
    double norm_dev = 0;
    double dot_dev = 0;
    std::vector<std::array<double, 3>> bloch;
    for (const auto &p : e.projectors()) {
        bloch.push_back(density_to_bloch(p));
        const auto &v = bloch.back();
        norm_dev = std::max(norm_dev, std::abs(std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) - 1));
    }
    for (std::size_t i = 0; i < bloch.size(); i++) {
        for (std::size_t j = i + 1; j < bloch.size(); j++) {
            double dot = bloch[i][0] * bloch[j][0] + bloch[i][1] * bloch[j][1] + bloch[i][2] * bloch[j][2];
            dot_dev = std::max(dot_dev, std::abs(dot + 1.0 / 3.0));
        }
    }
    cert.add("bloch-vector-norm", norm_dev, tol);
    cert.add("bloch-tetrahedron-inner", dot_dev, tol);

    bool zeros_ok = true;
    double entropy_dev = 0;
    for (const auto &s : e.states()) {
        ProbabilityVector p = represent(e, orthogonal_qubit_state(s));
        zeros_ok = zeros_ok && static_cast<std::int64_t>(count_zeros(p.values(), kCountThreshold)) ==
                                   max_zero_bound(2, Field::Complex);
        entropy_dev = std::max(entropy_dev, std::abs(shannon_entropy(p) - std::log2(3.0)));
    }
    cert.add_exact("antipodal-zero-count", zeros_ok);
    cert.add("antipodal-entropy", entropy_dev, tol);
}

void verify_hesse_coxeter(Certificate &cert, double tol, std::uint64_t seed) {
    SicEnsemble e = hesse_sic_coxeter();
    add_sic_suite(cert, e, tol, seed);
    auto vertices = hessian_polyhedron();
    cert.add_exact("hessian-vertex-count", vertices.size() == 27);
    cert.add_exact("hessian-diameter-count", hessian_diameters(vertices).size() == 9);
    AdjacencyReport adj = hessian_adjacency_classes(tol);
    cert.add_exact("hessian-adjacency-partition", adj.partitions_coincide);
    double value_dev =
        std::max({adj.max_deviation, std::abs(adj.value_agree_one + 1.0), std::abs(adj.value_agree_other - 0.5)});
    cert.add("hessian-adjacency-values", value_dev, tol);

    SicEnsemble orbit = hesse_sic_orbit();
    double worst = 0;
    for (const auto &m : fidelity_matching(e.states(), orbit.states())) {
        worst = std::max(worst, 1 - m.fidelity);
    }
    cert.add("route-equivalence", worst, tol);
}

void verify_hesse_orbit(Certificate &cert, double tol, std::uint64_t seed) {
    SicEnsemble e = hesse_sic_orbit();
    add_sic_suite(cert, e, tol, seed);
    ComplexMatrix x = wh_shift(3);
    ComplexMatrix z = wh_phase(3);
    Complex omega = std::polar(1.0, 2 * std::numbers::pi / 3);
    cert.add("wh-commutation", max_abs_diff(z * x, omega * (x * z)), tol);
    double unitary = 0;
    for (const auto &dop : all_displacements(3)) {
        unitary = std::max(unitary, max_abs_diff(dop * dop.adjoint(), ComplexMatrix::identity(3)));
    }
    cert.add("wh-displacement-unitarity", unitary, tol);
}

void verify_hoggar(Certificate &cert, Twin twin, double tol, std::uint64_t seed) {
    SicEnsemble e = hoggar_sic(twin);
    add_sic_suite(cert, e, tol, seed);
    cert.add_exact("antisymmetric-label-count", antisymmetric_labels().size() == 28);
    cert.add_exact("ghz-identity", verify_ghz_identity(-1.0) && !verify_ghz_identity(1.0));
    // Labels 11xxxx give anti-Hermitian operators under the uncorrected first factor.
    bool phase_split = true;
    for (int v = 0; v < PauliLabel::kCount; v++) {
        PauliLabel label(v);
        ComplexMatrix d = three_qubit_pauli(label);
        bool anti = label.bit(1) == 1 && label.bit(2) == 1;
        phase_split = phase_split && max_abs_diff(d.adjoint(), anti ? -d : d) < kCountThreshold &&
                      first_factor_phase(label) == (anti ? Complex(0, -1) : Complex(1, 0));
    }
    cert.add_exact("first-factor-phase", phase_split);
}

void verify_mub(Certificate &cert, double tol) {
    SicEnsemble hesse = hesse_sic_orbit();
    MubDual m = mub_dual(hesse);
    cert.add("mub-purity", m.max_purity_deviation, tol);

    double within = 0;
    double across = 0;
    for (std::size_t a = 0; a < m.states.size(); a++) {
        for (std::size_t b = a + 1; b < m.states.size(); b++) {
            double f = fidelity(m.states[a], m.states[b]);
            if (a / 3 == b / 3) {
                within = std::max(within, f);
            } else {
                across = std::max(across, std::abs(f - 1.0 / 3.0));
            }
        }
    }
    cert.add("mub-orthonormal-within-class", within, tol);
    cert.add("mub-cross-class-fidelity", across, tol);

    bool zeros = all_of(m.probabilities, [](const ProbabilityVector &p) {
        return static_cast<std::int64_t>(count_zeros(p.values(), kCountThreshold)) == max_zero_bound(3, Field::Complex);
    });
    cert.add_exact("mub-zero-count-saturation", zeros);
    double entropy_dev = 0;
    for (const auto &p : m.probabilities) {
        entropy_dev = std::max(entropy_dev, std::abs(shannon_entropy(p) - std::log2(6.0)));
    }
    cert.add("mub-entropy", entropy_dev, tol);

    SicMubIncidence inc = sic_mub_incidence(hesse, m, kCountThreshold);
    cert.add_exact("sic-mub-incidence-per-sic", all_of(inc.per_sic, [](int c) { return c == 4; }));
    cert.add_exact("sic-mub-incidence-per-mub", all_of(inc.per_mub, [](int c) { return c == 3; }));

    bool trine_count = true;
    bool trine_rank = true;
    double trine_fid = 0;
    double trine_planar = 0;
    for (const auto &s : m.states) {
        try {
            SubspaceReport r = trine_extract(hesse, s, kCountThreshold);
            trine_rank = trine_rank && r.span_rank == 2;
            for (double f : r.pairwise_fidelity) {
                trine_fid = std::max(trine_fid, std::abs(f - 0.25));
            }
            trine_planar = std::max(trine_planar, r.coplanarity);
        } catch (const std::runtime_error &) {
            trine_count = false;
        }
    }
    cert.add_exact("trine-count", trine_count);
    cert.add_exact("trine-span-rank", trine_rank);
    cert.add("trine-pairwise-fidelity", trine_fid, tol);
    cert.add("trine-coplanarity", trine_planar, tol);

    bool dual_count = true;
    bool dual_rank = true;
    double dual_fid = 0;
    for (const auto &s : hesse.states()) {
        try {
            SubspaceReport r = qubit_sic_from_dual(m, s, kCountThreshold);
            dual_rank = dual_rank && r.span_rank == 2;
            for (double f : r.pairwise_fidelity) {
                dual_fid = std::max(dual_fid, std::abs(f - 1.0 / 3.0));
            }
        } catch (const std::runtime_error &) {
            dual_count = false;
        }
    }
    cert.add_exact("dual-qubit-sic-count", dual_count);
    cert.add_exact("dual-qubit-sic-span-rank", dual_rank);
    cert.add("dual-qubit-sic-pairwise-fidelity", dual_fid, tol);
}

void verify_twin(Certificate &cert, double tol) {
    SicEnsemble plus = hoggar_sic(Twin::Plus);
    SicEnsemble minus = hoggar_sic(Twin::Minus);
    TwinIncidence t = twin_incidence(plus, minus, kCountThreshold);
    cert.add_exact("row-regularity", all_of(t.row_counts, [](int c) { return c == 28; }));
    cert.add_exact("column-regularity", all_of(t.column_counts, [](int c) { return c == 28; }));
    cert.add("nonzero-overlap", t.nonzero_overlap_spread, tol);
    cert.add_exact("fiducial-zero-set", t.fiducial_row_is_antisymmetric_set);
    cert.add_exact("antisymmetric-label-count", antisymmetric_labels().size() == 28);
    cert.add_exact("zero-count-saturation", all_of(t.row_counts, [](int c) {
                       return c == max_zero_bound(8, Field::Complex);
                   }));

    Table1Report rep = table1_patterns(plus, minus);
    cert.add("table1-binary", rep.max_binary_deviation, tol);
    cert.add_exact("table1-row-weight", all_of(rep.row_weights, [](int w) { return w == 36; }));
    cert.add_exact("table1-alignment", rep.aligned && rep.column_permutation.size() == 64);

    double entropy_dev = 0;
    for (const auto &s : minus.states()) {
        entropy_dev = std::max(entropy_dev, std::abs(shannon_entropy(represent(plus, s)) - std::log2(36.0)));
    }
    cert.add("minus-state-entropy", entropy_dev, tol);
}

bool fano_lines_closed() {
    for (const auto &line : fano_plane().lines) {
        OctonionUnit prod = octonion_mul({line[0], 1}, {line[1], 1});
        if (prod.index != line[2]) {
            return false;
        }
    }
    return true;
}

void verify_fano(Certificate &cert) {
    bool square = true;
    bool anti = true;
    bool xor_law = true;
    for (int i = 1; i <= 7; i++) {
        square = square && octonion_mul({i, 1}, {i, 1}) == OctonionUnit{0, -1};
        for (int j = 1; j <= 7; j++) {
            if (i == j) {
                continue;
            }
            OctonionUnit ij = octonion_mul({i, 1}, {j, 1});
            OctonionUnit ji = octonion_mul({j, 1}, {i, 1});
            anti = anti && ij.index == ji.index && ij.sign == -ji.sign;
            xor_law = xor_law && ij.index == (i ^ j);
        }
    }
    cert.add_exact("octonion-square", square);
    cert.add_exact("octonion-antisymmetry", anti);
    cert.add_exact("octonion-xor-law", xor_law);
    cert.add_exact("octonion-fano-lines", fano_lines_closed());

    FanoPlane f = fano_plane();
    bool degree = true;
    for (int p = 1; p <= 7; p++) {
        int count = 0;
        for (int l = 0; l < 7; l++) {
            count += f.incident(p, l);
        }
        degree = degree && count == 3;
    }
    bool overlap = true;
    for (std::size_t a = 0; a < 7; a++) {
        for (std::size_t b = a + 1; b < 7; b++) {
            int common = 0;
            for (std::size_t k = 0; k < 7; k++) {
                common += f.incidence[a][k] * f.incidence[b][k];
            }
            overlap = overlap && common == 1;
        }
    }
    cert.add_exact("fano-point-degree", degree);
    cert.add_exact("fano-line-overlap", overlap);
    EquiangularReport r7 = check_equiangular(fano_lines_r7());
    cert.add_exact("fano-r7-equiangular", r7.exact && r7.equiangular);

    AntiFlagLines af = antiflag_lines_28();
    cert.add_exact("antiflag-count", af.lines.size() == 28);
    const int expected[4][3] = {{1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {1, -1, -1}};
    bool signs = true;
    for (int row = 0; row < 4; row++) {
        const auto &v = af.lines.vectors[static_cast<std::size_t>(row)].exact();
        for (int k = 0; k < 3; k++) {
            signs = signs && v[static_cast<std::size_t>(f.lines[0][static_cast<std::size_t>(k)] - 1)] ==
                                 GoldenScalar(expected[row][k]);
        }
    }
    cert.add_exact("antiflag-sign-matrix", signs);
    EquiangularReport ar = check_equiangular(af.lines);
    cert.add_exact("antiflag-equiangular", ar.exact && ar.equiangular);
    cert.add_exact("antiflag-gerzon-saturation",
                   static_cast<std::int64_t>(af.lines.size()) == gerzon_bound(7, Field::Real));

    std::vector<PauliLabel> images;
    for (const auto &tag : af.tags) {
        images.push_back(antiflag_to_pauli(tag.line, tag.point));
    }
    std::sort(images.begin(), images.end());
    bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
    cert.add_exact("antiflag-pauli-bijection", distinct && images == antisymmetric_labels());

    int flags = 0;
    bool rejected = true;
    for (int l = 0; l < 7; l++) {
        for (int p = 1; p <= 7; p++) {
            if (!f.incident(p, l)) {
                continue;
            }
            flags++;
            rejected = rejected && !is_antisymmetric(point_line_label(l, p));
            try {
                antiflag_to_pauli(l, p);
                rejected = false;
            } catch (const std::invalid_argument &) {
            }
        }
    }
    cert.add_exact("flag-rejection", rejected && flags == 21);

    bool labels = true;
    for (int v = 0; v < PauliLabel::kCount; v++) {
        PauliLabel label(v);
        auto [a, b] = hoggar_label_to_octonions(label);
        labels = labels && PauliLabel::from_xz(a.index, b.index) == label;
    }
    auto sample = hoggar_label_to_octonions(PauliLabel::from_xz(0b010, 0b101));
    labels = labels && sample.first == OctonionUnit{2, 1} && sample.second == OctonionUnit{5, 1};
    cert.add_exact("hoggar-octonion-labels", labels);
}

void verify_so8(Certificate &cert) {
    LineSet so8 = so8_lines_28();
    cert.add_exact("so8-count", so8.size() == 28);
    cert.add_exact("so8-base-vector", so8.vectors.front() == RealVector::integers({1, 1, 1, 0, 0, 0, 0}));
    EquiangularReport r = check_equiangular(so8);
    cert.add_exact("so8-equiangular", r.exact && r.equiangular);
    cert.add_exact("so8-gerzon-saturation", static_cast<std::int64_t>(so8.size()) == gerzon_bound(7, Field::Real));
    cert.add_exact("so8-antisymmetric-correspondence", so8.size() == antisymmetric_labels().size());
    cert.add_exact("ghz-identity", verify_ghz_identity(-1.0) && !verify_ghz_identity(1.0));
}

void verify_icosahedron(Certificate &cert) {
    const GoldenScalar phi = GoldenScalar::phi();
    IcosahedronOrbit ico = icosahedron_orbit();
    cert.add_exact("icosahedron-vertex-count", ico.vertices.size() == 12);
    cert.add_exact("icosahedron-line-classes", ico.classes.size() == 6);

    std::vector<RealVector> expected;
    for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
            GoldenScalar a(s1);
            GoldenScalar b = GoldenScalar(s2) * phi;
            expected.emplace_back(RealVector::Exact{GoldenScalar(0), a, b});
            expected.emplace_back(RealVector::Exact{b, GoldenScalar(0), a});
            expected.emplace_back(RealVector::Exact{a, b, GoldenScalar(0)});
        }
    }
    bool same = ico.vertices.size() == expected.size() && all_of(expected, [&](const RealVector &v) {
                    return std::find(ico.vertices.begin(), ico.vertices.end(), v) != ico.vertices.end();
                });
    cert.add_exact("icosahedron-vertex-form", same);
    EquiangularReport r = check_equiangular(ico.lines);
    cert.add_exact("icosahedron-equiangular", r.exact && r.equiangular && ico.lines.cosine_squared == GoldenScalar(Rational(1, 5)));
    bool cross = true;
    for (std::size_t i = 0; i < ico.lines.size(); i++) {
        for (std::size_t j = i + 1; j < ico.lines.size(); j++) {
            GoldenScalar ip = exact_dot(ico.lines.vectors[i], ico.lines.vectors[j]);
            cross = cross && (ip == phi || ip == -phi);
        }
    }
    cert.add_exact("icosahedron-cross-inner-phi", cross);
    cert.add_exact("icosahedron-gerzon-saturation",
                   static_cast<std::int64_t>(ico.classes.size()) == gerzon_bound(3, Field::Real));

    auto group = tetrahedral_group();
    cert.add_exact("tetrahedral-order", group.size() == 12);
    RealWhOps ops = real_wh_ops();
    const GoldenMatrix id = GoldenMatrix::identity(3);
    GoldenMatrix mz = -ops.z;
    cert.add_exact("tetrahedral-relations",
                   power(mz, 2) == id && power(ops.x, 3) == id && power(mz * ops.x, 3) == id);
    cert.add_exact("tetrahedral-special-orthogonal", all_of(group, [&](const GoldenMatrix &g) {
                       return g.transpose() * g == id && g.determinant() == GoldenScalar(1);
                   }));
    cert.add_exact("real-wh-relations",
                   power(ops.x, 3) == id && power(ops.z, 2) == id && power(ops.z * ops.x, 3) == -id);

    GoldenScalar y = golden_fiducial();
    cert.add_exact("golden-fiducial-polynomial", y * y - y - GoldenScalar(1) == GoldenScalar(0));
    RealVector v(RealVector::Exact{GoldenScalar(0), GoldenScalar(1), y});
    cert.add_exact("golden-equal-overlap",
                   exact_dot(ops.z.apply(v), v) == exact_dot(power(ops.x, 2).apply(v), v));
    cert.add_exact("golden-inverse", y.inverse() == y - GoldenScalar(1));
}

void verify_trine(Certificate &cert, double tol) {
    LineSet t = trine_r2();
    cert.add_exact("trine-r2-count", static_cast<std::int64_t>(t.size()) == gerzon_bound(2, Field::Real));
    cert.add("trine-r2-equiangular", check_equiangular(t, tol).max_deviation, tol);
    auto frame = frame_operator(t);
    double dev = 0;
    for (std::size_t r = 0; r < 2; r++) {
        for (std::size_t c = 0; c < 2; c++) {
            dev = std::max(dev, std::abs(frame[r * 2 + c] - (r == c ? 1.5 : 0.0)));
        }
    }
    cert.add("trine-r2-tight-frame", dev, tol);
    cert.add("trine-r2-welch", std::abs(t.common_cosine - welch_angle(2, Field::Real)), tol);
}

void verify_bounds(Certificate &cert, double tol) {
    cert.add_exact("gerzon-real-7", gerzon_bound(7, Field::Real) == 28);
    cert.add_exact("gerzon-complex-8", gerzon_bound(8, Field::Complex) == 64);
    cert.add_exact("gerzon-octonionic-3", gerzon_bound(3, Field::Octonionic3) == 27);
    bool rejects = false;
    try {
        gerzon_bound(4, Field::Octonionic3);
    } catch (const std::invalid_argument &) {
        rejects = true;
    }
    cert.add_exact("gerzon-octonionic-other-dimensions", rejects);
    cert.add_exact("zero-bound-real-23", max_zero_bound(23, Field::Real) == 176);
    cert.add_exact("zero-bound-complex",
                   max_zero_bound(2, Field::Complex) == 1 && max_zero_bound(3, Field::Complex) == 3 &&
                       max_zero_bound(8, Field::Complex) == 28);
    cert.add_exact("n-eff-pure-values", n_eff_pure(2) == 3 && n_eff_pure(3) == 6 && n_eff_pure(8) == 36);
    double welch = std::max({std::abs(welch_angle(3, Field::Complex) - 0.5),
                             std::abs(welch_angle(3, Field::Real) - 1 / std::sqrt(5.0)),
                             std::abs(welch_angle(7, Field::Real) - 1.0 / 3.0)});
    cert.add("welch-angle-values", welch, tol);
    cert.add_exact("fibonacci-lucas", fibonacci_lucas_dims(5) == std::vector<std::int64_t>{4, 8, 19, 48, 124});
}

Json bounds_json(const std::vector<BoundsRow> &rows) {
    Json arr = Json::array();
    for (const auto &r : rows) {
        Json row;
        row["d"] = r.d;
        row["field"] = r.field;
        row["gerzon"] = r.gerzon;
        if (r.zero_bound >= 0) {
            row["zero_bound"] = r.zero_bound;
        }
        if (!std::isnan(r.welch)) {
            row["welch"] = format_double(r.welch);
        }
        arr.push_back(std::move(row));
    }
    Json j;
    j["bounds"] = std::move(arr);
    return j;
}

std::string json_text(const Json &j) { return j.dump(2) + "\n"; }

}  // namespace

const std::vector<Family> &all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (const auto &fn : kFamilyNames) {
            out.push_back(fn.family);
        }
        return out;
    }();
    return families;
}

std::string to_string(Family f) {
    for (const auto &fn : kFamilyNames) {
        if (fn.family == f) {
            return fn.name;
        }
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (const auto &fn : kFamilyNames) {
        if (name == fn.name) {
            return fn.family;
        }
    }
    throw UsageError("unknown family '" + std::string(name) + "'");
}

bool is_sic_family(Family f) {
    switch (f) {
        case Family::QubitPlus:
        case Family::QubitMinus:
        case Family::HesseCoxeter:
        case Family::HesseOrbit:
        case Family::HoggarPlus:
        case Family::HoggarMinus:
            return true;
        default:
            return false;
    }
}

SicEnsemble build_sic(Family f) {
    switch (f) {
        case Family::QubitPlus:
            return qubit_sic(Twin::Plus);
        case Family::QubitMinus:
            return qubit_sic(Twin::Minus);
        case Family::HesseCoxeter:
            return hesse_sic_coxeter();
        case Family::HesseOrbit:
            return hesse_sic_orbit();
        case Family::HoggarPlus:
            return hoggar_sic(Twin::Plus);
        case Family::HoggarMinus:
            return hoggar_sic(Twin::Minus);
        default:
            throw UsageError("family '" + to_string(f) + "' is not a SIC");
    }
}

std::string to_string(Format f) {
    switch (f) {
        case Format::Json:
            return "json";
        case Format::Csv:
            return "csv";
        case Format::Text:
            return "text";
    }
    return "unknown";
}

Format parse_format(std::string_view name) {
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "text") {
        return Format::Text;
    }
    throw UsageError("unknown format '" + std::string(name) + "'");
}

void RunConfig::validate() const {
    if (!(tolerance > 0) || !std::isfinite(tolerance)) {
        throw UsageError("tolerance must be a positive number");
    }
    if (restarts < 1) {
        throw UsageError("restarts must be at least 1");
    }
}

Json config_to_json(const RunConfig &config, bool with_family) {
    Json j;
    if (with_family) {
        j["family"] = to_string(config.family);
    }
    j["tolerance"] = format_double(config.tolerance);
    j["seed"] = config.seed;
    j["restarts"] = config.restarts;
    return j;
}

Certificate verify_family(Family family, double tolerance, std::uint64_t seed) {
    Certificate cert(to_string(family));
    try {
        switch (family) {
            case Family::QubitPlus:
                verify_qubit(cert, Twin::Plus, tolerance, seed);
                break;
            case Family::QubitMinus:
                verify_qubit(cert, Twin::Minus, tolerance, seed);
                break;
            case Family::HesseCoxeter:
                verify_hesse_coxeter(cert, tolerance, seed);
                break;
            case Family::HesseOrbit:
                verify_hesse_orbit(cert, tolerance, seed);
                break;
            case Family::HoggarPlus:
                verify_hoggar(cert, Twin::Plus, tolerance, seed);
                break;
            case Family::HoggarMinus:
                verify_hoggar(cert, Twin::Minus, tolerance, seed);
                break;
            case Family::MubDual:
                verify_mub(cert, tolerance);
                break;
            case Family::TwinIncidence:
                verify_twin(cert, tolerance);
                break;
            case Family::Fano28:
                verify_fano(cert);
                break;
            case Family::So828:
                verify_so8(cert);
                break;
            case Family::Icosahedron:
                verify_icosahedron(cert);
                break;
            case Family::TrineR2:
                verify_trine(cert, tolerance);
                break;
            case Family::Bounds:
                verify_bounds(cert, tolerance);
                break;
        }
    } catch (const std::exception &) {
        cert.add_exact("construction", false);
    }
    return cert;
}

std::string render_certificate(const Certificate &c, const RunConfig &config) {
    switch (config.format) {
        case Format::Json:
            return json_text(certificate_to_json(c, config_to_json(config)));
        case Format::Csv:
            return certificate_to_csv(c);
        case Format::Text:
            return certificate_to_text(c);
    }
    return {};
}

void emit(const std::string &document, const RunConfig &config, std::ostream &out) {
    if (config.output.empty()) {
        out << document;
        out.flush();
        if (!out) {
            throw IoError("error writing to standard output");
        }
        return;
    }
    write_file(config.output, document);
}

VerifyOutcome run_verify(const RunConfig &config, std::ostream &out) {
    config.validate();
    VerifyOutcome outcome{verify_family(config.family, config.tolerance, config.seed), kExitCheckFailure};
    emit(render_certificate(outcome.certificate, config), config, out);
    outcome.exit_status = outcome.certificate.overall() ? kExitPass : kExitCheckFailure;
    return outcome;
}

AggregateReport run_report_all(const RunConfig &config) {
    config.validate();
    std::vector<std::future<Certificate>> jobs;
    for (Family f : all_families()) {
        jobs.push_back(std::async(std::launch::async, [f, &config] {
            return verify_family(f, config.tolerance, config.seed);
        }));
    }
    AggregateReport report;
    report.combined = Certificate("report-all");
    for (auto &job : jobs) {
        report.sections.push_back(job.get());
        report.combined.merge(report.sections.back(), report.sections.back().subject() + "/");
    }
    return report;
}

std::string render_report(const AggregateReport &report, const RunConfig &config) {
    switch (config.format) {
        case Format::Json: {
            Json j;
            j["subject"] = report.combined.subject();
            j["config"] = config_to_json(config, false);
            Json families = Json::array();
            for (const auto &s : report.sections) {
                Json section = certificate_to_json(s, Json::object());
                section.erase("config");
                families.push_back(std::move(section));
            }
            j["families"] = std::move(families);
            j["checks"] = certificate_to_json(report.combined, Json::object())["checks"];
            j["overall"] = report.combined.overall();
            return json_text(j);
        }
        case Format::Csv: {
            std::string out = "subject,name,passed,max_deviation,tolerance\n";
            for (const auto &s : report.sections) {
                out += certificate_to_csv(s, false);
            }
            return out;
        }
        case Format::Text: {
            std::string out;
            for (const auto &s : report.sections) {
                out += certificate_to_text(s);
            }
            out += std::string("overall: ") + (report.combined.overall() ? "PASS" : "FAIL") + "\n";
            return out;
        }
    }
    return {};
}

EntropySearchReport entropy_search_command(const RunConfig &config) {
    config.validate();
    SicEnsemble e = build_sic(config.family);
    const int d = e.d();

    std::vector<StateVector> dual;
    if (d == 2) {
        for (const auto &s : e.states()) {
            dual.push_back(orthogonal_qubit_state(s));
        }
    } else if (d == 3) {
        dual = mub_dual().states;
    } else {
        dual = hoggar_sic(config.family == Family::HoggarPlus ? Twin::Minus : Twin::Plus).states();
    }

    SearchOptions options;
    options.restarts = config.restarts;
    options.seed = config.seed;
    auto minima = entropy_min_search(e, options);
    auto global = global_minimizers(minima);

    EntropySearchReport rep;
    rep.family = to_string(config.family);
    rep.dimension = d;
    rep.local_minima = minima.size();
    rep.minimum_entropy = minima.front().entropy;
    rep.expected_entropy = std::log2(static_cast<double>(n_eff_pure(d)));
    for (const auto &m : global) {
        MinimizerRow row{m.entropy, 0, -1};
        for (std::size_t k = 0; k < dual.size(); k++) {
            double f = fidelity(m.state, dual[k]);
            if (f > row.fidelity) {
                row.fidelity = f;
                row.dual_index = k;
            }
        }
        rep.minimizers.push_back(row);
    }
    std::stable_sort(rep.minimizers.begin(), rep.minimizers.end(),
                     [](const MinimizerRow &a, const MinimizerRow &b) { return a.dual_index < b.dual_index; });

    rep.certificate = Certificate("entropy-search/" + rep.family);
    rep.certificate.add("search-minimum-entropy", std::abs(rep.minimum_entropy - rep.expected_entropy),
                        kSearchTolerance);
    double worst = 0;
    for (const auto &row : rep.minimizers) {
        worst = std::max(worst, 1 - row.fidelity);
    }
    rep.certificate.add("search-minimizers-match-dual", worst, kSearchTolerance);
    if (d <= 3) {
        std::set<std::size_t> hit;
        for (const auto &row : rep.minimizers) {
            hit.insert(row.dual_index);
        }
        rep.certificate.add_exact("search-minimizer-count",
                                  rep.minimizers.size() == dual.size() && hit.size() == dual.size());
    }
    return rep;
}

std::string render_entropy_report(const EntropySearchReport &report, const RunConfig &config) {
    switch (config.format) {
        case Format::Json: {
            Json j = certificate_to_json(report.certificate, config_to_json(config));
            Json result;
            result["dimension"] = report.dimension;
            result["minimum_entropy"] = format_double(report.minimum_entropy);
            result["expected_entropy"] = format_double(report.expected_entropy);
            result["local_minima"] = report.local_minima;
            Json rows = Json::array();
            for (const auto &r : report.minimizers) {
                Json row;
                row["entropy"] = format_double(r.entropy);
                row["dual_index"] = r.dual_index;
                row["fidelity"] = format_double(r.fidelity);
                rows.push_back(std::move(row));
            }
            result["minimizers"] = std::move(rows);
            j["search"] = std::move(result);
            return json_text(j);
        }
        case Format::Csv: {
            std::ostringstream out;
            out << "entropy,dual_index,fidelity\n";
            for (const auto &r : report.minimizers) {
                out << format_double(r.entropy) << ',' << r.dual_index << ',' << format_double(r.fidelity) << '\n';
            }
            return out.str();
        }
        case Format::Text: {
            std::ostringstream out;
            out << report.family << " (d = " << report.dimension << ")\n"
                << "  minimum entropy   " << format_double(report.minimum_entropy) << "\n"
                << "  expected          " << format_double(report.expected_entropy) << "\n"
                << "  local minima      " << report.local_minima << "\n"
                << "  global minimizers " << report.minimizers.size() << "\n";
            for (const auto &r : report.minimizers) {
                out << "    dual " << std::setw(3) << r.dual_index << "  fidelity " << format_double(r.fidelity) << "\n";
            }
            out << certificate_to_text(report.certificate);
            return out.str();
        }
    }
    return {};
}

Json build_summary(Family family) {
    Json j;
    j["family"] = to_string(family);
    if (is_sic_family(family)) {
        SicEnsemble e = build_sic(family);
        j["kind"] = "sic";
        j["dimension"] = e.d();
        j["elements"] = e.size();
        j["provenance"] = e.provenance();
        return j;
    }
    switch (family) {
        case Family::MubDual: {
            MubDual m = mub_dual();
            j["kind"] = "states";
            j["dimension"] = 3;
            j["elements"] = m.states.size();
            j["bases"] = m.bases.size();
            break;
        }
        case Family::TwinIncidence: {
            TwinIncidence t = twin_incidence();
            j["kind"] = "incidence";
            j["rows"] = t.zero_pattern.size();
            j["cols"] = t.zero_pattern.size();
            j["zeros_per_row"] = t.row_counts.front();
            break;
        }
        case Family::Bounds:
            j["kind"] = "bounds";
            j["rows"] = bounds_table({2, 3, 7, 8, 23}).size();
            break;
        default: {
            LineSet set = family == Family::Fano28      ? antiflag_lines_28().lines
                          : family == Family::So828     ? so8_lines_28()
                          : family == Family::Icosahedron ? icosahedron_orbit().lines
                                                          : trine_r2();
            j["kind"] = "lines";
            j["ambient_dimension"] = set.ambient_dimension;
            j["elements"] = set.size();
            j["exact"] = set.is_exact();
            break;
        }
    }
    return j;
}

Json export_json(Family family) {
    if (is_sic_family(family)) {
        return ensemble_to_json(build_sic(family));
    }
    switch (family) {
        case Family::MubDual:
            return states_to_json(3, mub_dual().states, "mub-dual");
        case Family::TwinIncidence:
            return incidence_to_json(twin_incidence().zero_pattern);
        case Family::Fano28: {
            AntiFlagLines af = antiflag_lines_28();
            Json j = line_set_to_json(af.lines);
            Json tags = Json::array();
            for (const auto &t : af.tags) {
                Json tag;
                tag["line"] = t.line;
                tag["point"] = t.point;
                tag["pauli"] = antiflag_to_pauli(t.line, t.point).to_string();
                tags.push_back(std::move(tag));
            }
            j["tags"] = std::move(tags);
            return j;
        }
        case Family::So828:
            return line_set_to_json(so8_lines_28());
        case Family::Icosahedron:
            return line_set_to_json(icosahedron_orbit().lines);
        case Family::TrineR2:
            return line_set_to_json(trine_r2());
        case Family::Bounds:
            return bounds_json(bounds_table({2, 3, 7, 8, 23}));
        default:
            break;
    }
    throw UsageError("family '" + to_string(family) + "' has no export");
}

std::string export_csv(Family family) {
    switch (family) {
        case Family::Fano28:
            return line_set_to_csv(antiflag_lines_28().lines);
        case Family::So828:
            return line_set_to_csv(so8_lines_28());
        case Family::Icosahedron:
            return line_set_to_csv(icosahedron_orbit().lines);
        case Family::TrineR2:
            return line_set_to_csv(trine_r2());
        default:
            throw UsageError("CSV export is available only for line-set families");
    }
}

std::vector<std::vector<bool>> family_incidence(Family family) {
    switch (family) {
        case Family::MubDual:
            return sic_mub_incidence(hesse_sic_orbit(), mub_dual(), kCountThreshold).orthogonal;
        case Family::TwinIncidence:
            return twin_incidence().zero_pattern;
        case Family::Fano28: {
            FanoPlane f = fano_plane();
            std::vector<std::vector<bool>> m(7, std::vector<bool>(7));
            for (std::size_t l = 0; l < 7; l++) {
                for (std::size_t p = 0; p < 7; p++) {
                    m[l][p] = f.incidence[l][p] == 1;
                }
            }
            return m;
        }
        default:
            throw UsageError("family '" + to_string(family) + "' has no incidence structure");
    }
}

std::vector<BoundsRow> bounds_table(const std::vector<int> &dims) {
    std::vector<BoundsRow> rows;
    for (int d : dims) {
        if (d < 2) {
            throw UsageError("dimensions must be at least 2");
        }
        rows.push_back({d, "real", gerzon_bound(d, Field::Real), max_zero_bound(d, Field::Real),
                        welch_angle(d, Field::Real)});
        rows.push_back({d, "complex", gerzon_bound(d, Field::Complex), max_zero_bound(d, Field::Complex),
                        welch_angle(d, Field::Complex)});
        if (d == 3) {
            rows.push_back({d, "octonionic3", gerzon_bound(d, Field::Octonionic3), -1,
                            std::numeric_limits<double>::quiet_NaN()});
        }
    }
    return rows;
}

std::string render_bounds(const std::vector<BoundsRow> &rows, Format format) {
    std::ostringstream out;
    auto zero = [](const BoundsRow &r) { return r.zero_bound >= 0 ? std::to_string(r.zero_bound) : std::string(); };
    auto welch = [](const BoundsRow &r) { return std::isnan(r.welch) ? std::string() : format_double(r.welch); };
    switch (format) {
        case Format::Json:
            return json_text(bounds_json(rows));
        case Format::Csv:
            out << "d,field,gerzon,zero_bound,welch\n";
            for (const auto &r : rows) {
                out << r.d << ',' << r.field << ',' << r.gerzon << ',' << zero(r) << ',' << welch(r) << '\n';
            }
            return out.str();
        case Format::Text:
            out << std::left << std::setw(5) << "d" << std::setw(13) << "field" << std::setw(8) << "gerzon"
                << std::setw(12) << "zero_bound"
                << "welch\n";
            for (const auto &r : rows) {
                out << std::setw(5) << r.d << std::setw(13) << r.field << std::setw(8) << r.gerzon << std::setw(12)
                    << zero(r) << welch(r) << '\n';
            }
            return out.str();
    }
    return {};
}

}  // namespace sporadic
