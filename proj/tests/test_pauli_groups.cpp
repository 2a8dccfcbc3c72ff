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
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "sporadic/pauli.hpp"

using namespace sporadic;
namespace pm = sporadic::pauli_matrices;

namespace {

// Unimodular c with a = c b, or 0 if none exists.
Complex proportionality(const ComplexMatrix &a, const ComplexMatrix &b) {
    Complex c = 0;
    for (std::size_t i = 0; i < a.rows() && c == Complex(0); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            if (std::abs(b(i, j)) > 1e-9) {
                c = a(i, j) / b(i, j);
                break;
            }
        }
    }
    if (c == Complex(0) || std::abs(std::abs(c) - 1) > 1e-12 || max_abs_diff(a, c * b) > 1e-12) {
        return 0;
    }
    return c;
}

oracle::Mat pauli_power(int x, int z) {
    oracle::Mat m = oracle::eye(2);
    if (x) {
        m = oracle::mul(m, oracle::sx());
    }
    if (z) {
        m = oracle::mul(m, oracle::sz());
    }
    return m;
}

}  // namespace

TEST_CASE("wh_shift and wh_phase examples") {
    CHECK(wh_shift(2) == pm::x());
    CHECK(max_abs_diff(wh_phase(2), pm::z()) < 1e-15);
    CHECK(max_abs_diff(power(wh_shift(3), 3), ComplexMatrix::identity(3)) < 1e-15);
    CHECK(max_abs_diff(power(wh_phase(3), 3), ComplexMatrix::identity(3)) < 1e-14);
    const Complex omega = std::polar(1.0, 2 * std::numbers::pi / 3);
    CHECK(max_abs_diff(wh_phase(3) * wh_shift(3), omega * (wh_shift(3) * wh_phase(3))) < 1e-15);
    CHECK_THROWS_AS(wh_shift(1), std::invalid_argument);
}

TEST_CASE("displacement examples") {
    CHECK(max_abs_diff(displacement(WhLabel(3, 0, 0)), ComplexMatrix::identity(3)) == 0.0);
    // -i X Z by hand: X Z = [[0, -1], [1, 0]], so -i X Z = [[0, i], [-i, 0]] = -sigma_y.
    oracle::Mat minus_y = {{0, oracle::C(0, 1)}, {oracle::C(0, -1), 0}};
    CHECK(oracle::max_diff(displacement(WhLabel(2, 1, 1)), minus_y) < 1e-15);

    auto ops = all_displacements(3);
    REQUIRE(ops.size() == 9);
    for (int l = 0; l < 3; l++) {
        for (int a = 0; a < 3; a++) {
            for (int m = 0; m < 3; m++) {
                for (int b = 0; b < 3; b++) {
                    ComplexMatrix prod = displacement(WhLabel(3, l, a)) * displacement(WhLabel(3, m, b));
                    CHECK(proportionality(prod, displacement(WhLabel(3, l + m, a + b))) != Complex(0));
                }
            }
        }
    }
}

TEST_CASE("WhLabel reduces modulo d") {
    WhLabel w(3, 4, -1);
    CHECK(w.l() == 1);
    CHECK(w.alpha() == 2);
    CHECK(WhLabel(5, 7, 12) == WhLabel(5, 2, 2));
    CHECK_THROWS_AS(WhLabel(1, 0, 0), std::invalid_argument);
}

TEST_CASE("three_qubit_pauli examples") {
    CHECK(three_qubit_pauli(PauliLabel(0)) == ComplexMatrix::identity(8));
    CHECK(max_abs_diff(three_qubit_pauli(PauliLabel::parse("101010")), tensor({pm::x(), pm::x(), pm::x()})) == 0.0);

    // First factor sigma_x sigma_z with no phase correction: -i sigma_y on qubit one.
    ComplexMatrix m = three_qubit_pauli(PauliLabel::parse("110000"));
    ComplexMatrix expected = tensor({Complex(0, -1) * pm::y(), pm::identity(), pm::identity()});
    CHECK(max_abs_diff(m, expected) < 1e-15);
    CHECK(first_factor_phase(PauliLabel::parse("110000")) == Complex(0, -1));
    CHECK(first_factor_phase(PauliLabel::parse("001111")) == Complex(1, 0));
}

TEST_CASE("three_qubit_pauli agrees with the Kronecker product for every label") {
    for (int v = 0; v < 64; v++) {
        PauliLabel label(v);
        int m[7];
        for (int k = 1; k <= 6; k++) {
            m[k] = label.bit(k);
        }
        oracle::C c2 = (m[3] && m[4]) ? oracle::C(0, -1) : oracle::C(1, 0);
        oracle::C c3 = (m[5] && m[6]) ? oracle::C(0, -1) : oracle::C(1, 0);
        oracle::Mat f2 = pauli_power(m[3], m[4]);
        oracle::Mat f3 = pauli_power(m[5], m[6]);
        for (auto &row : f2) {
            for (auto &x : row) {
                x *= c2;
            }
        }
        for (auto &row : f3) {
            for (auto &x : row) {
                x *= c3;
            }
        }
        oracle::Mat ref = oracle::kron(oracle::kron(pauli_power(m[1], m[2]), f2), f3);
        CHECK(oracle::max_diff(three_qubit_pauli(label), ref) < 1e-15);
    }
}

TEST_CASE("PauliLabel bit layout and parsing") {
    PauliLabel l = PauliLabel::parse("010101");
    CHECK(l.value() == 0b010101);
    CHECK(l.bit(1) == 0);
    CHECK(l.bit(2) == 1);
    CHECK(l.x_bits() == 0b000);
    CHECK(l.z_bits() == 0b111);
    CHECK(PauliLabel::from_xz(0b010, 0b101).to_string() == "011001");
    CHECK(PauliLabel::from_xz(5, 3) == PauliLabel::parse("100111"));
    CHECK_THROWS_AS(PauliLabel::parse("0101"), std::invalid_argument);
    CHECK_THROWS_AS(PauliLabel::parse("01010x"), std::invalid_argument);
    CHECK_THROWS_AS(PauliLabel(64), std::invalid_argument);
    CHECK_THROWS_AS(PauliLabel(-1), std::invalid_argument);
    for (int v = 0; v < 64; v++) {
        PauliLabel p(v);
        CHECK(PauliLabel::parse(p.to_string()) == p);
        CHECK(PauliLabel::from_xz(p.x_bits(), p.z_bits()) == p);
    }
}

TEST_CASE("is_antisymmetric examples") {
    CHECK_FALSE(is_antisymmetric(PauliLabel(0)));
    CHECK(is_antisymmetric(PauliLabel::parse("110000")));
    auto labels = antisymmetric_labels();
    CHECK(labels.size() == 28);
    std::vector<int> values;
    for (auto l : labels) {
        values.push_back(l.value());
    }
    CHECK(values == oracle::odd_symplectic_labels());
}

TEST_CASE("verify_ghz_identity examples") {
    CHECK(verify_ghz_identity());
    CHECK_FALSE(verify_ghz_identity(1.0));
    oracle::Mat xzz = oracle::kron(oracle::kron(oracle::sx(), oracle::sz()), oracle::sz());
    oracle::Mat zxz = oracle::kron(oracle::kron(oracle::sz(), oracle::sx()), oracle::sz());
    oracle::Mat zzx = oracle::kron(oracle::kron(oracle::sz(), oracle::sz()), oracle::sx());
    oracle::Mat rhs = oracle::mul(oracle::mul(xzz, zxz), zzx);
    oracle::Mat xxx = oracle::kron(oracle::kron(oracle::sx(), oracle::sx()), oracle::sx());
    for (auto &row : rhs) {
        for (auto &x : row) {
            x = -x;
        }
    }
    CHECK(oracle::max_diff(xxx, rhs) == 0.0);
}

TEST_CASE("property: displacements and three-qubit Paulis are unitary") {
    for (int d = 2; d <= 7; d++) {
        for (const auto &u : all_displacements(d)) {
            CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(static_cast<std::size_t>(d))) < 1e-12);
        }
    }
    for (const auto &u : all_three_qubit_paulis()) {
        CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(8)) < 1e-12);
    }
}

TEST_CASE("property: antisymmetry flag equals the transpose test") {
    for (int v = 0; v < 64; v++) {
        ComplexMatrix m = three_qubit_pauli(PauliLabel(v));
        bool transpose_antisymmetric = max_abs_diff(m.transpose(), -m) < 1e-12;
        bool transpose_symmetric = max_abs_diff(m.transpose(), m) < 1e-12;
        CHECK(transpose_antisymmetric != transpose_symmetric);
        CHECK(is_antisymmetric(PauliLabel(v)) == transpose_antisymmetric);
    }
}

TEST_CASE("property: the 64 operators are Hilbert-Schmidt orthogonal") {
    auto ops = all_three_qubit_paulis();
    for (std::size_t a = 0; a < 64; a++) {
        for (std::size_t b = 0; b < 64; b++) {
            CHECK(std::abs(hs_inner(ops[a], ops[b]) - Complex(a == b ? 8.0 : 0.0, 0)) < 1e-10);
        }
    }
}

TEST_CASE("property: label composition is XOR up to a unimodular phase") {
    auto ops = all_three_qubit_paulis();
    for (int a = 0; a < 64; a++) {
        for (int b = 0; b < 64; b++) {
            ComplexMatrix prod = ops[static_cast<std::size_t>(a)] * ops[static_cast<std::size_t>(b)];
            CHECK(proportionality(prod, ops[static_cast<std::size_t>(a ^ b)]) != Complex(0));
        }
    }
}
