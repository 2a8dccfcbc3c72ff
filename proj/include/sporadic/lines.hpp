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

#ifndef SPORADIC_LINES_HPP
#define SPORADIC_LINES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sporadic/field.hpp"
#include "sporadic/golden.hpp"
#include "sporadic/pauli.hpp"

namespace sporadic {

/// Signed octonion unit: index 0 is the real unit 1, indices 1..7 are e1..e7.
struct OctonionUnit {
    int index = 0;
    int sign = 1;

    bool operator==(const OctonionUnit &) const = default;
};

/// Checks index in 0..7 and sign in {-1, +1}; throws std::invalid_argument otherwise.
OctonionUnit make_unit(int index, int sign = 1);
std::string to_string(OctonionUnit u);

/// Product from the Cayley-Graves table. For distinct imaginary units the
/// result index is the XOR of the operand indices.
OctonionUnit octonion_mul(OctonionUnit a, OctonionUnit b);

/// The Fano plane on points 1..7 with lines
/// (123)(145)(176)(246)(257)(347)(365) in that order.
/// incidence[line][point - 1] is 1 when the point lies on the line.
struct FanoPlane {
    std::array<std::array<int, 3>, 7> lines;
    std::array<std::array<int, 7>, 7> incidence;

    bool incident(int point, int line) const;
    /// Indices of the three lines through a point.
    std::array<int, 3> lines_through(int point) const;
};
FanoPlane fano_plane();

/// Lines through the origin, given by spanning vectors, with the common value
/// of the squared cosine between distinct lines.
struct LineSet {
    std::size_t ambient_dimension = 0;
    std::vector<RealVector> vectors;
    GoldenScalar cosine_squared;  ///< exact value; meaningful when every vector is exact
    double common_cosine = 0;

    std::size_t size() const { return vectors.size(); }
    bool is_exact() const;
};

struct EquiangularReport {
    std::size_t pairs = 0;
    bool exact = false;             ///< decided in exact arithmetic
    bool equiangular = false;
    double max_deviation = 0;       ///< float mode: max | |cos| - common_cosine |; exact mode: 0 or 1
    std::vector<GoldenScalar> distinct_cosine_squared;  ///< exact mode only
};

/// Pairwise |<u, v>| / (|u| |v|) against the set's common cosine. Exact sets
/// are compared with zero tolerance; float sets use tol.
EquiangularReport check_equiangular(const LineSet &set, double tol = 1e-12);

/// Row-major d x d matrix sum_i v_i v_i^T / |v_i|^2 in doubles.
std::vector<double> frame_operator(const LineSet &set);

/// Rows of the Fano incidence matrix: 7 lines in R^7, |v|^2 = 3, <u, v> = 1.
LineSet fano_lines_r7();

/// An anti-flag: Fano line index 0..6 and a point 1..7 not on it.
struct AntiFlag {
    int line;
    int point;

    bool operator==(const AntiFlag &) const = default;
};

struct AntiFlagLines {
    LineSet lines;
    std::vector<AntiFlag> tags;  ///< tags[i] produced lines.vectors[i]
};

/// For each line and off-line point q, the incidence row with entry p set to
/// the sign of e_p e_q. Lines in listed order, points ascending.
AntiFlagLines antiflag_lines_28();

/// Dual vector of a Fano line: the unique nonzero z in F_2^3 with
/// popcount(p & z) even for every point p on the line.
int fano_line_code(int line);

/// Label with x-bits = point and z-bits = fano_line_code(line), with no
/// incidence check. Flags give symmetric labels, anti-flags antisymmetric ones.
PauliLabel point_line_label(int line, int point);
/// As point_line_label, but throws std::invalid_argument on a flag.
PauliLabel antiflag_to_pauli(int line, int point);
/// Inverse on antisymmetric labels; throws std::invalid_argument otherwise.
AntiFlag pauli_to_antiflag(PauliLabel label);

/// For each point, the indicator over line indices of the lines through it,
/// followed by its three single-entry sign flips.
LineSet so8_lines_28();

/// (x-bits, z-bits) read as indices into {1, e1, ..., e7}.
std::pair<OctonionUnit, OctonionUnit> hoggar_label_to_octonions(PauliLabel label);

struct RealWhOps {
    GoldenMatrix x;  ///< cyclic shift, X^3 = I
    GoldenMatrix z;  ///< diag(1, -1, 1)
};
RealWhOps real_wh_ops();

/// Closure of {X, -Z} under multiplication, identity first, breadth-first order.
/// Throws std::logic_error if the closure exceeds 24 elements.
std::vector<GoldenMatrix> tetrahedral_group();

struct IcosahedronOrbit {
    std::vector<RealVector> vertices;             ///< 12 vectors, orbit order
    std::vector<std::array<std::size_t, 2>> classes;  ///< antipodal pairs of vertex indices
    LineSet lines;                                 ///< one representative per class
};
/// Orbit of (0, 1, phi) and its negative under the tetrahedral group.
IcosahedronOrbit icosahedron_orbit();

/// The positive root of y^2 - y - 1, exactly phi.
GoldenScalar golden_fiducial();

/// Three unit vectors in R^2 at 120 degrees (float mode).
LineSet trine_r2();

/// Maximum number of equiangular lines: d(d+1)/2 over R, d^2 over C, and 27
/// for the octonionic projective plane (d = 3 only). Throws std::invalid_argument
/// for d < 2 or an octonionic query with d != 3.
std::int64_t gerzon_bound(int d, Field field);

/// Cosine of a maximal equiangular set: 1/sqrt(d + 1) over C, 1/sqrt(d + 2) over R.
/// Throws std::invalid_argument for d < 2 or the octonionic field.
double welch_angle(int d, Field field);

}  // namespace sporadic

#endif
