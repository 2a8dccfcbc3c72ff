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

#include "sporadic/lines.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

namespace sporadic {

namespace {

// Products e_i e_j for i, j in 1..7. Entry s*k means s*e_k; 0 on the diagonal means -1.
constexpr int kCayleyGraves[7][7] = {
    {0, 3, -2, 5, -4, -7, 6},
    {-3, 0, 1, 6, 7, -4, -5},
    {2, -1, 0, 7, -6, 5, -4},
    {-5, -6, -7, 0, 1, 2, 3},
    {4, -7, 6, -1, 0, -3, 2},
    {7, 4, -5, -2, 3, 0, -1},
    {-6, 5, 4, -3, -2, 1, 0},
};

constexpr std::array<std::array<int, 3>, 7> kFanoLines = {{
    {1, 2, 3},
    {1, 4, 5},
    {1, 7, 6},
    {2, 4, 6},
    {2, 5, 7},
    {3, 4, 7},
    {3, 6, 5},
}};

void require_point(int point) {
    if (point < 1 || point > 7) {
        throw std::invalid_argument("Fano point must lie in 1..7, got " + std::to_string(point));
    }
}

void require_line(int line) {
    if (line < 0 || line > 6) {
        throw std::invalid_argument("Fano line index must lie in 0..6, got " + std::to_string(line));
    }
}

RealVector integer_vector(const std::vector<std::int64_t> &v) {
    RealVector::Exact e;
    e.reserve(v.size());
    for (auto x : v) {
        e.emplace_back(x);
    }
    return RealVector(std::move(e));
}

GoldenScalar exact_cosine_squared(const RealVector &u, const RealVector &v) {
    GoldenScalar uv = exact_dot(u, v);
    return uv * uv / (exact_dot(u, u) * exact_dot(v, v));
}

}  // namespace

OctonionUnit make_unit(int index, int sign) {
    if (index < 0 || index > 7 || (sign != 1 && sign != -1)) {
        throw std::invalid_argument("invalid octonion unit (" + std::to_string(index) + ", " + std::to_string(sign) +
                                    ")");
    }
    return {index, sign};
}

std::string to_string(OctonionUnit u) {
    std::string body = u.index == 0 ? "1" : "e" + std::to_string(u.index);
    return (u.sign < 0 ? "-" : "") + body;
}

OctonionUnit octonion_mul(OctonionUnit a, OctonionUnit b) {
    a = make_unit(a.index, a.sign);
    b = make_unit(b.index, b.sign);
    int sign = a.sign * b.sign;
    if (a.index == 0) {
        return {b.index, sign};
    }
    if (b.index == 0) {
        return {a.index, sign};
    }
    int entry = kCayleyGraves[a.index - 1][b.index - 1];
    if (entry == 0) {
        return {0, -sign};
    }
    return {std::abs(entry), entry > 0 ? sign : -sign};
}

bool FanoPlane::incident(int point, int line) const {
    require_point(point);
    require_line(line);
    return incidence[static_cast<std::size_t>(line)][static_cast<std::size_t>(point - 1)] == 1;
}

std::array<int, 3> FanoPlane::lines_through(int point) const {
    std::array<int, 3> out{};
    std::size_t n = 0;
    for (int l = 0; l < 7; l++) {
        if (incident(point, l)) {
            out.at(n++) = l;
        }
    }
    return out;
}

FanoPlane fano_plane() {
    FanoPlane f{};
    f.lines = kFanoLines;
    for (std::size_t l = 0; l < 7; l++) {
        f.incidence[l].fill(0);
        for (int p : kFanoLines[l]) {
            f.incidence[l][static_cast<std::size_t>(p - 1)] = 1;
        }
    }
    return f;
}

bool LineSet::is_exact() const {
    return std::all_of(vectors.begin(), vectors.end(), [](const RealVector &v) { return v.is_exact(); });
}

EquiangularReport check_equiangular(const LineSet &set, double tol) {
    EquiangularReport r;
    r.exact = set.is_exact();
    r.equiangular = true;
    for (std::size_t i = 0; i < set.size(); i++) {
        for (std::size_t j = i + 1; j < set.size(); j++) {
            r.pairs++;
            if (r.exact) {
                GoldenScalar c2 = exact_cosine_squared(set.vectors[i], set.vectors[j]);
                if (std::find(r.distinct_cosine_squared.begin(), r.distinct_cosine_squared.end(), c2) ==
                    r.distinct_cosine_squared.end()) {
                    r.distinct_cosine_squared.push_back(c2);
                }
                if (!(c2 == set.cosine_squared)) {
                    r.equiangular = false;
                    r.max_deviation = 1;
                }
            } else {
                const auto &u = set.vectors[i];
                const auto &v = set.vectors[j];
                double c = std::abs(approx_dot(u, v)) / std::sqrt(approx_dot(u, u) * approx_dot(v, v));
                r.max_deviation = std::max(r.max_deviation, std::abs(c - set.common_cosine));
            }
        }
    }
    if (!r.exact) {
        r.equiangular = r.max_deviation <= tol;
    }
    return r;
}

std::vector<double> frame_operator(const LineSet &set) {
    const std::size_t d = set.ambient_dimension;
    std::vector<double> f(d * d, 0.0);
    for (const auto &v : set.vectors) {
        auto x = v.to_doubles();
        double n2 = 0;
        for (double c : x) {
            n2 += c * c;
        }
        for (std::size_t r = 0; r < d; r++) {
            for (std::size_t c = 0; c < d; c++) {
                f[r * d + c] += x[r] * x[c] / n2;
            }
        }
    }
    return f;
}

LineSet fano_lines_r7() {
    FanoPlane f = fano_plane();
    LineSet set;
    set.ambient_dimension = 7;
    for (const auto &row : f.incidence) {
        set.vectors.push_back(integer_vector({row.begin(), row.end()}));
    }
    set.cosine_squared = GoldenScalar(Rational(1, 9));
    set.common_cosine = 1.0 / 3.0;
    return set;
}

AntiFlagLines antiflag_lines_28() {
    FanoPlane f = fano_plane();
    AntiFlagLines out;
    out.lines.ambient_dimension = 7;
    out.lines.cosine_squared = GoldenScalar(Rational(1, 9));
    out.lines.common_cosine = 1.0 / 3.0;
    for (int l = 0; l < 7; l++) {
        for (int q = 1; q <= 7; q++) {
            if (f.incident(q, l)) {
                continue;
            }
            std::vector<std::int64_t> v(7, 0);
            for (int p : f.lines[static_cast<std::size_t>(l)]) {
                v[static_cast<std::size_t>(p - 1)] = octonion_mul({p, 1}, {q, 1}).sign;
            }
            out.lines.vectors.push_back(integer_vector(v));
            out.tags.push_back({l, q});
        }
    }
    return out;
}

int fano_line_code(int line) {
    require_line(line);
    const auto &pts = kFanoLines[static_cast<std::size_t>(line)];
    for (int z = 1; z < 8; z++) {
        bool even = std::all_of(pts.begin(), pts.end(), [&](int p) { return std::popcount(static_cast<unsigned>(p & z)) % 2 == 0; });
        if (even) {
            return z;
        }
    }
    throw std::logic_error("fano_line_code: no dual vector");
}

PauliLabel point_line_label(int line, int point) {
    require_point(point);
    return PauliLabel::from_xz(point, fano_line_code(line));
}

PauliLabel antiflag_to_pauli(int line, int point) {
    if (fano_plane().incident(point, line)) {
        throw std::invalid_argument("antiflag_to_pauli: point " + std::to_string(point) + " lies on line " +
                                    std::to_string(line));
    }
    return point_line_label(line, point);
}

AntiFlag pauli_to_antiflag(PauliLabel label) {
    if (!is_antisymmetric(label)) {
        throw std::invalid_argument("pauli_to_antiflag: label " + label.to_string() + " is symmetric");
    }
    int z = label.z_bits();
    for (int l = 0; l < 7; l++) {
        if (fano_line_code(l) == z) {
            return {l, label.x_bits()};
        }
    }
    throw std::logic_error("pauli_to_antiflag: no line with code " + std::to_string(z));
}

LineSet so8_lines_28() {
    FanoPlane f = fano_plane();
    LineSet set;
    set.ambient_dimension = 7;
    set.cosine_squared = GoldenScalar(Rational(1, 9));
    set.common_cosine = 1.0 / 3.0;
    for (int p = 1; p <= 7; p++) {
        std::vector<std::int64_t> base(7, 0);
        auto through = f.lines_through(p);
        for (int l : through) {
            base[static_cast<std::size_t>(l)] = 1;
        }
        set.vectors.push_back(integer_vector(base));
        for (int l : through) {
            auto flipped = base;
            flipped[static_cast<std::size_t>(l)] = -1;
            set.vectors.push_back(integer_vector(flipped));
        }
    }
    return set;
}

std::pair<OctonionUnit, OctonionUnit> hoggar_label_to_octonions(PauliLabel label) {
    return {OctonionUnit{label.x_bits(), 1}, OctonionUnit{label.z_bits(), 1}};
}

RealWhOps real_wh_ops() {
    return {GoldenMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, GoldenMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
}

std::vector<GoldenMatrix> tetrahedral_group() {
    RealWhOps ops = real_wh_ops();
    const std::vector<GoldenMatrix> generators = {ops.x, -ops.z};
    std::vector<GoldenMatrix> group = {GoldenMatrix::identity(3)};
    std::deque<std::size_t> frontier = {0};
    while (!frontier.empty()) {
        GoldenMatrix g = group[frontier.front()];
        frontier.pop_front();
        for (const auto &s : generators) {
            GoldenMatrix h = g * s;
            if (std::find(group.begin(), group.end(), h) == group.end()) {
                group.push_back(std::move(h));
                if (group.size() > 24) {
                    throw std::logic_error("tetrahedral_group: closure exceeded 24 elements");
                }
                frontier.push_back(group.size() - 1);
            }
        }
    }
    return group;
}

IcosahedronOrbit icosahedron_orbit() {
    const GoldenScalar phi = GoldenScalar::phi();
    const RealVector seed(RealVector::Exact{GoldenScalar(0), GoldenScalar(1), phi});
    IcosahedronOrbit out;
    for (const auto &g : tetrahedral_group()) {
        for (const auto &v : {g.apply(seed), negate(g.apply(seed))}) {
            if (std::find(out.vertices.begin(), out.vertices.end(), v) == out.vertices.end()) {
                out.vertices.push_back(v);
            }
        }
    }
    std::vector<bool> placed(out.vertices.size(), false);
    for (std::size_t i = 0; i < out.vertices.size(); i++) {
        if (placed[i]) {
            continue;
        }
        RealVector opposite = negate(out.vertices[i]);
        for (std::size_t j = i + 1; j < out.vertices.size(); j++) {
            if (!placed[j] && out.vertices[j] == opposite) {
                placed[i] = placed[j] = true;
                out.classes.push_back({i, j});
                break;
            }
        }
    }
    out.lines.ambient_dimension = 3;
    out.lines.cosine_squared = GoldenScalar(Rational(1, 5));
    out.lines.common_cosine = 1 / std::sqrt(5.0);
    for (const auto &c : out.classes) {
        out.lines.vectors.push_back(out.vertices[c[0]]);
    }
    return out;
}

GoldenScalar golden_fiducial() { return GoldenScalar::phi(); }

LineSet trine_r2() {
    LineSet set;
    set.ambient_dimension = 2;
    set.common_cosine = 0.5;
    set.cosine_squared = GoldenScalar(Rational(1, 4));
    for (int k = 0; k < 3; k++) {
        double theta = 2 * std::numbers::pi * k / 3;
        set.vectors.emplace_back(RealVector::Approx{std::cos(theta), std::sin(theta)});
    }
    return set;
}

std::int64_t gerzon_bound(int d, Field field) {
    if (d < 2) {
        throw std::invalid_argument("gerzon_bound: dimension must be at least 2");
    }
    std::int64_t dd = d;
    switch (field) {
        case Field::Real:
            return dd * (dd + 1) / 2;
        case Field::Complex:
            return dd * dd;
        case Field::Octonionic3:
            if (d != 3) {
                throw std::invalid_argument("gerzon_bound: the octonionic bound is defined only at d = 3");
            }
            return 27;
    }
    throw std::invalid_argument("gerzon_bound: unknown field");
}

double welch_angle(int d, Field field) {
    if (d < 2) {
        throw std::invalid_argument("welch_angle: dimension must be at least 2");
    }
    switch (field) {
        case Field::Real:
            return 1 / std::sqrt(d + 2.0);
        case Field::Complex:
            return 1 / std::sqrt(d + 1.0);
        case Field::Octonionic3:
            break;
    }
    throw std::invalid_argument("welch_angle: only real and complex fields are supported");
}

}  // namespace sporadic
