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


#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sporadic/lines.hpp"

using namespace sporadic;

namespace {

// Multiplication table of the unit octonions, entry {sign, index}; index 0 is the real unit.
constexpr int kTable[8][8][2] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}, {1, 5}, {-1, 4}, {-1, 7}, {1, 6}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}, {1, 6}, {1, 7}, {-1, 4}, {-1, 5}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}, {1, 7}, {-1, 6}, {1, 5}, {-1, 4}},
    {{1, 4}, {-1, 5}, {-1, 6}, {-1, 7}, {-1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 5}, {1, 4}, {-1, 7}, {1, 6}, {-1, 1}, {-1, 0}, {-1, 3}, {1, 2}},
    {{1, 6}, {1, 7}, {1, 4}, {-1, 5}, {-1, 2}, {1, 3}, {-1, 0}, {-1, 1}},
    {{1, 7}, {-1, 6}, {1, 5}, {1, 4}, {-1, 3}, {-1, 2}, {1, 1}, {-1, 0}},
};

constexpr int kIncidence[7][7] = {
    {1, 1, 1, 0, 0, 0, 0}, {1, 0, 0, 1, 1, 0, 0}, {1, 0, 0, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1, 0},
    {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 1, 0, 0, 1}, {0, 0, 1, 0, 1, 1, 0},
};

std::int64_t int_dot(const RealVector &a, const RealVector &b) {
    GoldenScalar s = exact_dot(a, b);
    REQUIRE(s.is_integer());
    return static_cast<std::int64_t>(numerator(s.rational_part()));
}

std::vector<std::int64_t> ints(const RealVector &v) {
    std::vector<std::int64_t> out;
    for (const auto &x : v.exact()) {
        REQUIRE(x.is_integer());
        out.push_back(static_cast<std::int64_t>(numerator(x.rational_part())));
    }
    return out;
}

}  // namespace

TEST_CASE("octonion_mul examples") {
    CHECK(octonion_mul(make_unit(1), make_unit(4)) == make_unit(5));
    CHECK(octonion_mul(make_unit(1), make_unit(1)) == make_unit(0, -1));
    CHECK(octonion_mul(make_unit(2), make_unit(1)) == make_unit(3, -1));
    CHECK(octonion_mul(make_unit(3, -1), make_unit(5, -1)) == make_unit(6, -1));
    CHECK(to_string(make_unit(0, -1)) == "-1");
    CHECK(to_string(make_unit(7)) == "e7");
    CHECK_THROWS_AS(make_unit(8), std::invalid_argument);
    CHECK_THROWS_AS(make_unit(1, 2), std::invalid_argument);
}

TEST_CASE("octonion_mul reproduces the multiplication table") {
    for (int i = 0; i < 8; i++) {
        for (int j = 0; j < 8; j++) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    OctonionUnit got = octonion_mul(make_unit(i, si), make_unit(j, sj));
                    CHECK(got.index == kTable[i][j][1]);
                    CHECK(got.sign == si * sj * kTable[i][j][0]);
                }
            }
        }
    }
}

TEST_CASE("property: octonion unit laws") {
    for (int i = 1; i < 8; i++) {
        CHECK(octonion_mul(make_unit(i), make_unit(i)) == make_unit(0, -1));
        for (int j = 1; j < 8; j++) {
            if (i == j) {
                continue;
            }
            OctonionUnit ab = octonion_mul(make_unit(i), make_unit(j));
            OctonionUnit ba = octonion_mul(make_unit(j), make_unit(i));
            CHECK(ab.index == ba.index);
            CHECK(ab.sign == -ba.sign);
            CHECK(ab.index == (i ^ j));
        }
    }
}

TEST_CASE("Fano plane") {
    FanoPlane f = fano_plane();
    CHECK(std::find(f.lines.begin(), f.lines.end(), std::array<int, 3>{3, 6, 5}) != f.lines.end());
    for (int l = 0; l < 7; l++) {
        for (int p = 0; p < 7; p++) {
            CHECK(f.incidence[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)] == kIncidence[l][p]);
            CHECK(f.incident(p + 1, l) == (kIncidence[l][p] == 1));
        }
    }
    for (int p = 1; p <= 7; p++) {
        auto through = f.lines_through(p);
        for (int l : through) {
            CHECK(f.incident(p, l));
        }
    }
    for (int a = 0; a < 7; a++) {
        for (int b = a + 1; b < 7; b++) {
            int shared = 0;
            for (int p = 0; p < 7; p++) {
                shared += kIncidence[a][p] * kIncidence[b][p];
            }
            CHECK(shared == 1);
        }
    }
    // Each line is closed under XOR of its points.
    for (const auto &line : f.lines) {
        CHECK((line[0] ^ line[1]) == line[2]);
    }
}

TEST_CASE("seven lines in R7") {
    LineSet s = fano_lines_r7();
    REQUIRE(s.size() == 7);
    CHECK(s.ambient_dimension == 7);
    for (std::size_t a = 0; a < 7; a++) {
        CHECK(int_dot(s.vectors[a], s.vectors[a]) == 3);
        for (std::size_t b = a + 1; b < 7; b++) {
            CHECK(int_dot(s.vectors[a], s.vectors[b]) == 1);
        }
    }
    CHECK(s.common_cosine == doctest::Approx(1.0 / 3));
    CHECK(s.cosine_squared == GoldenScalar(Rational(1, 9)));
    EquiangularReport r = check_equiangular(s);
    CHECK(r.exact);
    CHECK(r.equiangular);
    CHECK(r.pairs == 21);
}

TEST_CASE("anti-flag lines") {
    AntiFlagLines af = antiflag_lines_28();
    REQUIRE(af.lines.size() == 28);
    REQUIRE(af.tags.size() == 28);
    // First Fano line (1 2 3) times e4..e7.
    const std::vector<std::vector<std::int64_t>> expected = {
        {1, 1, 1, 0, 0, 0, 0}, {-1, 1, -1, 0, 0, 0, 0}, {-1, -1, 1, 0, 0, 0, 0}, {1, -1, -1, 0, 0, 0, 0}};
    for (int q = 4; q <= 7; q++) {
        auto it = std::find(af.tags.begin(), af.tags.end(), AntiFlag{0, q});
        REQUIRE(it != af.tags.end());
        auto idx = static_cast<std::size_t>(it - af.tags.begin());
        CHECK(ints(af.lines.vectors[idx]) == expected[static_cast<std::size_t>(q - 4)]);
    }
    FanoPlane f = fano_plane();
    std::set<std::pair<int, int>> tags;
    for (std::size_t i = 0; i < 28; i++) {
        const AntiFlag &t = af.tags[i];
        CHECK_FALSE(f.incident(t.point, t.line));
        tags.insert({t.line, t.point});
        // Entry at p is the sign of e_p e_q from the table above.
        auto v = ints(af.lines.vectors[i]);
        for (int p = 1; p <= 7; p++) {
            int expected = f.incident(p, t.line) ? kTable[p][t.point][0] : 0;
            CHECK(v[static_cast<std::size_t>(p - 1)] == expected);
        }
    }
    CHECK(tags.size() == 28);
    for (std::size_t a = 0; a < 28; a++) {
        for (std::size_t b = a + 1; b < 28; b++) {
            CHECK(std::abs(int_dot(af.lines.vectors[a], af.lines.vectors[b])) == 1);
        }
    }
    EquiangularReport r = check_equiangular(af.lines);
    CHECK(r.exact);
    CHECK(r.equiangular);
    CHECK(af.lines.size() == static_cast<std::size_t>(gerzon_bound(7, Field::Real)));
}

TEST_CASE("anti-flags and antisymmetric labels") {
    FanoPlane f = fano_plane();
    std::set<int> images;
    for (int l = 0; l < 7; l++) {
        for (int p = 1; p <= 7; p++) {
            if (f.incident(p, l)) {
                CHECK_FALSE(is_antisymmetric(point_line_label(l, p)));
                CHECK_THROWS_AS(antiflag_to_pauli(l, p), std::invalid_argument);
            } else {
                PauliLabel lab = antiflag_to_pauli(l, p);
                CHECK(is_antisymmetric(lab));
                CHECK(lab.value() != 0);
                CHECK(lab.x_bits() == p);
                CHECK(lab.z_bits() == fano_line_code(l));
                CHECK(pauli_to_antiflag(lab) == AntiFlag{l, p});
                images.insert(lab.value());
            }
        }
    }
    std::vector<int> sorted(images.begin(), images.end());
    CHECK(sorted == oracle::odd_symplectic_labels());
    CHECK_THROWS_AS(pauli_to_antiflag(PauliLabel(0)), std::invalid_argument);

    std::set<int> codes;
    for (int l = 0; l < 7; l++) {
        codes.insert(fano_line_code(l));
    }
    CHECK(codes.size() == 7);
    CHECK_FALSE(codes.count(0));
}

TEST_CASE("SO(8) lines") {
    LineSet s = so8_lines_28();
    REQUIRE(s.size() == 28);
    CHECK(ints(s.vectors[0]) == std::vector<std::int64_t>{1, 1, 1, 0, 0, 0, 0});
    bool flip_found = false;
    for (const auto &v : s.vectors) {
        flip_found = flip_found || ints(v) == std::vector<std::int64_t>{1, -1, 1, 0, 0, 0, 0};
    }
    CHECK(flip_found);
    for (std::size_t a = 0; a < 28; a++) {
        CHECK(int_dot(s.vectors[a], s.vectors[a]) == 3);
        for (std::size_t b = a + 1; b < 28; b++) {
            CHECK(std::abs(int_dot(s.vectors[a], s.vectors[b])) == 1);
        }
    }
    CHECK(check_equiangular(s).equiangular);
}

TEST_CASE("Hoggar labels as octonion pairs") {
    auto [a, b] = hoggar_label_to_octonions(PauliLabel::from_xz(0b010, 0b101));
    CHECK(a == make_unit(2));
    CHECK(b == make_unit(5));
    auto [c, d] = hoggar_label_to_octonions(PauliLabel::from_xz(0, 7));
    CHECK(c == make_unit(0));
    CHECK(d == make_unit(7));
    for (int u = 0; u < 64; u++) {
        for (int v = 0; v < 64; v++) {
            PauliLabel lu(u);
            PauliLabel lv(v);
            if (lu.x_bits() == 0 || lv.x_bits() == 0 || lu.x_bits() == lv.x_bits()) {
                continue;
            }
            auto xu = hoggar_label_to_octonions(lu).first;
            auto xv = hoggar_label_to_octonions(lv).first;
            CHECK(octonion_mul(xu, xv).index == hoggar_label_to_octonions(lu ^ lv).first.index);
        }
    }
}

TEST_CASE("real Weyl-Heisenberg operators and the tetrahedral group") {
    RealWhOps ops = real_wh_ops();
    GoldenMatrix id = GoldenMatrix::identity(3);
    CHECK(ops.x == GoldenMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    CHECK(ops.z == GoldenMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
    CHECK(power(ops.x, 3) == id);
    CHECK(power(ops.z, 2) == id);
    CHECK(power(ops.z * ops.x, 3) == -id);
    GoldenMatrix mz = -ops.z;
    CHECK(power(mz * ops.x, 3) == id);

    auto group = tetrahedral_group();
    CHECK(group.size() == 12);
    CHECK(std::find(group.begin(), group.end(), id) != group.end());
    for (const auto &g : group) {
        CHECK(g * g.transpose() == id);
        CHECK(g.determinant() == GoldenScalar(1));
        for (const auto &h : group) {
            CHECK(std::find(group.begin(), group.end(), g * h) != group.end());
        }
    }
}

TEST_CASE("icosahedron orbit") {
    IcosahedronOrbit ico = icosahedron_orbit();
    GoldenScalar phi = GoldenScalar::phi();
    std::vector<RealVector> expected;
    for (int s : {1, -1}) {
        for (int t : {1, -1}) {
            GoldenScalar a(s);
            GoldenScalar b = GoldenScalar(t) * phi;
            expected.push_back(RealVector(RealVector::Exact{0, a, b}));
            expected.push_back(RealVector(RealVector::Exact{b, 0, a}));
            expected.push_back(RealVector(RealVector::Exact{a, b, 0}));
        }
    }
    REQUIRE(ico.vertices.size() == 12);
    for (const auto &v : expected) {
        CHECK(std::find(ico.vertices.begin(), ico.vertices.end(), v) != ico.vertices.end());
    }
    CHECK(ico.classes.size() == 6);
    for (const auto &c : ico.classes) {
        CHECK(ico.vertices[c[1]] == negate(ico.vertices[c[0]]));
    }
    REQUIRE(ico.lines.size() == 6);
    for (std::size_t a = 0; a < 6; a++) {
        for (std::size_t b = a + 1; b < 6; b++) {
            GoldenScalar ip = exact_dot(ico.lines.vectors[a], ico.lines.vectors[b]);
            CHECK((ip == phi || ip == -phi));
        }
    }
    CHECK(ico.lines.cosine_squared == GoldenScalar(Rational(1, 5)));
    EquiangularReport r = check_equiangular(ico.lines);
    CHECK(r.exact);
    CHECK(r.equiangular);
    CHECK(ico.lines.size() == static_cast<std::size_t>(gerzon_bound(3, Field::Real)));
}

TEST_CASE("golden fiducial") {
    GoldenScalar y = golden_fiducial();
    CHECK(y == GoldenScalar::phi());
    CHECK(y * y - y - GoldenScalar(1) == GoldenScalar(0));
    CHECK(y.inverse() == y - GoldenScalar(1));
    RealWhOps ops = real_wh_ops();
    RealVector v(RealVector::Exact{0, 1, y});
    CHECK(exact_dot(ops.z.apply(v), v) == exact_dot(power(ops.x, 2).apply(v), v));
}

TEST_CASE("trine in the plane") {
    LineSet t = trine_r2();
    REQUIRE(t.size() == 3);
    for (std::size_t a = 0; a < 3; a++) {
        CHECK(approx_dot(t.vectors[a], t.vectors[a]) == doctest::Approx(1.0));
        for (std::size_t b = a + 1; b < 3; b++) {
            CHECK(approx_dot(t.vectors[a], t.vectors[b]) == doctest::Approx(-0.5));
        }
    }
    auto frame = frame_operator(t);
    REQUIRE(frame.size() == 4);
    CHECK(frame[0] == doctest::Approx(1.5));
    CHECK(frame[3] == doctest::Approx(1.5));
    CHECK(std::abs(frame[1]) < 1e-15);
    CHECK(std::abs(frame[2]) < 1e-15);
    CHECK(t.size() == static_cast<std::size_t>(gerzon_bound(2, Field::Real)));
    CHECK(t.common_cosine == doctest::Approx(welch_angle(2, Field::Real)));
}

TEST_CASE("Gerzon bound and Welch angle") {
    CHECK(gerzon_bound(7, Field::Real) == 28);
    CHECK(gerzon_bound(8, Field::Complex) == 64);
    CHECK(gerzon_bound(3, Field::Octonionic3) == 27);
    CHECK_THROWS_AS(gerzon_bound(4, Field::Octonionic3), std::invalid_argument);
    CHECK_THROWS_AS(gerzon_bound(1, Field::Real), std::invalid_argument);
    CHECK(welch_angle(3, Field::Complex) == doctest::Approx(0.5));
    CHECK(welch_angle(3, Field::Real) == doctest::Approx(1 / std::sqrt(5.0)));
    CHECK(welch_angle(7, Field::Real) == doctest::Approx(1.0 / 3));
    CHECK_THROWS_AS(welch_angle(3, Field::Octonionic3), std::invalid_argument);
}

TEST_CASE("property: float equiangularity check catches a perturbed vector") {
    gen::Source src(3);
    for (int trial = 0; trial < 20; trial++) {
        LineSet t = trine_r2();
        auto v = t.vectors[1].to_doubles();
        double eps = src.uniform(1e-6, 1e-2);
        double c = std::cos(eps);
        double s = std::sin(eps);
        t.vectors[1] = RealVector(RealVector::Approx{c * v[0] - s * v[1], s * v[0] + c * v[1]});
        EquiangularReport r = check_equiangular(t);
        CHECK_FALSE(r.equiangular);
        CHECK(r.max_deviation > 1e-7);
    }
}
