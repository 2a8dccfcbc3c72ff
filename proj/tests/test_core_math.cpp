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

#include "doctest.h"
#include "oracles.hpp"
#include "sporadic/golden.hpp"
#include "sporadic/matrix.hpp"
#include "sporadic/sic.hpp"

using namespace sporadic;
namespace pm = sporadic::pauli_matrices;

TEST_CASE("hs_inner examples") {
    CHECK(hs_inner(pm::identity(), pm::identity()) == Complex(2, 0));
    CHECK(std::abs(hs_inner(pm::x(), pm::y())) == 0.0);

    SicEnsemble hesse = hesse_sic_orbit();
    for (std::size_t j = 0; j < 9; j++) {
        for (std::size_t k = j + 1; k < 9; k++) {
            CHECK(std::abs(hs_inner(hesse.projector(j), hesse.projector(k)) - 0.25) < 1e-12);
        }
    }
}

TEST_CASE("hs_inner matches the oracle trace and rejects mismatched shapes") {
    gen::Source src(11);
    for (int trial = 0; trial < 20; trial++) {
        std::size_t n = static_cast<std::size_t>(src.integer(1, 6));
        ComplexMatrix a = src.matrix(n, n);
        ComplexMatrix b = src.matrix(n, n);
        Complex expected = oracle::trace(oracle::mul(oracle::dagger(oracle::from(a)), oracle::from(b)));
        CHECK(std::abs(hs_inner(a, b) - expected) < 1e-12);
    }
    CHECK_THROWS_AS(hs_inner(ComplexMatrix::identity(2), ComplexMatrix::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(hs_inner(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("tensor examples") {
    CHECK(tensor(pm::identity(), pm::identity()) == ComplexMatrix::identity(4));

    ComplexMatrix yyy = tensor({pm::y(), pm::y(), pm::y()});
    CHECK(yyy.rows() == 8);
    CHECK(max_abs_diff(yyy.transpose(), -yyy) == 0.0);
    CHECK(oracle::max_diff(yyy, oracle::kron(oracle::kron(oracle::sy(), oracle::sy()), oracle::sy())) == 0.0);

    ComplexMatrix xz = tensor(pm::x(), pm::z());
    CHECK(xz(0, 3) == Complex(0, 0));
    CHECK(xz(0, 2) == Complex(1, 0));
    CHECK(oracle::max_diff(xz, oracle::kron(oracle::sx(), oracle::sz())) == 0.0);
}

TEST_CASE("tensor of rectangular factors matches the oracle") {
    gen::Source src(12);
    for (int trial = 0; trial < 10; trial++) {
        ComplexMatrix a = src.matrix(static_cast<std::size_t>(src.integer(1, 3)), static_cast<std::size_t>(src.integer(1, 3)));
        ComplexMatrix b = src.matrix(static_cast<std::size_t>(src.integer(1, 3)), static_cast<std::size_t>(src.integer(1, 3)));
        ComplexMatrix t = tensor(a, b);
        CHECK(t.rows() == a.rows() * b.rows());
        CHECK(t.cols() == a.cols() * b.cols());
        CHECK(oracle::max_diff(t, oracle::kron(oracle::from(a), oracle::from(b))) < 1e-15);
    }
}

TEST_CASE("hermitian_eigenvalues examples") {
    auto ev = hermitian_eigenvalues(pm::z());
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(-1.0).epsilon(1e-14));

    // Gram = (d/(d+1)) I + (1/(d+1)) J has eigenvalues d (once) and d/(d+1).
    for (int d : {3, 8}) {
        SicEnsemble e = d == 3 ? hesse_sic_orbit() : hoggar_sic(Twin::Plus);
        auto g = hermitian_eigenvalues(e.gram());
        REQUIRE(g.size() == static_cast<std::size_t>(d * d));
        CHECK(std::abs(g.front() - d) < 1e-9);
        for (std::size_t k = 1; k < g.size(); k++) {
            CHECK(std::abs(g[k] - d / (d + 1.0)) < 1e-9);
        }
    }
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
    ComplexMatrix m{{1, 2}, {0, 1}};
    CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
    CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("hermitian_eigenvalues of a diagonalized matrix recovers its spectrum") {
    // U diag(l) U^dagger with U built from Gram-Schmidt on random vectors.
    gen::Source src(13);
    for (std::size_t n : {2u, 3u, 5u, 8u}) {
        std::vector<StateVector> basis;
        while (basis.size() < n) {
            StateVector v = src.unit_state(n);
            std::vector<Complex> w(v.amplitudes().begin(), v.amplitudes().end());
            for (const auto &b : basis) {
                Complex c = inner(b, v);
                for (std::size_t k = 0; k < n; k++) {
                    w[k] -= c * b[k];
                }
            }
            basis.push_back(StateVector(w).normalized());
        }
        std::vector<double> spectrum;
        ComplexMatrix m(n, n);
        for (std::size_t k = 0; k < n; k++) {
            spectrum.push_back(src.uniform(-3, 3));
            m += basis[k].projector() * Complex(spectrum.back(), 0);
        }
        std::sort(spectrum.rbegin(), spectrum.rend());
        auto ev = hermitian_eigenvalues(m);
        for (std::size_t k = 0; k < n; k++) {
            CHECK(std::abs(ev[k] - spectrum[k]) < 1e-10);
        }
    }
}

TEST_CASE("operator_rank examples") {
    CHECK(operator_rank(qubit_sic(Twin::Plus).projectors()) == 4);
    CHECK(operator_rank(hesse_sic_orbit().projectors()) == 9);
    std::vector<ComplexMatrix> twice = {pm::identity(), pm::identity()};
    CHECK(operator_rank(twice) == 1);
    std::vector<ComplexMatrix> empty;
    CHECK_THROWS_AS(operator_rank(empty), std::invalid_argument);
    std::vector<ComplexMatrix> mixed = {ComplexMatrix::identity(2), ComplexMatrix::identity(3)};
    CHECK_THROWS_AS(operator_rank(mixed), std::invalid_argument);
}

TEST_CASE("property: hs_inner(A, A) is real and nonnegative for Hermitian A") {
    gen::Source src(21);
    for (int trial = 0; trial < 200; trial++) {
        ComplexMatrix a = src.hermitian(static_cast<std::size_t>(src.integer(1, 8)));
        Complex v = hs_inner(a, a);
        CHECK(std::abs(v.imag()) < 1e-12);
        CHECK(v.real() >= -1e-12);
    }
}

TEST_CASE("property: tensor is associative on unit-norm inputs") {
    gen::Source src(22);
    for (int trial = 0; trial < 100; trial++) {
        auto dim = [&] { return static_cast<std::size_t>(src.integer(1, 3)); };
        ComplexMatrix a = src.unit_matrix(dim(), dim());
        ComplexMatrix b = src.unit_matrix(dim(), dim());
        ComplexMatrix c = src.unit_matrix(dim(), dim());
        CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) <= 1e-14);
    }
}

TEST_CASE("property: eigenvalues sum to the trace") {
    gen::Source src(23);
    for (int trial = 0; trial < 100; trial++) {
        ComplexMatrix a = src.hermitian(static_cast<std::size_t>(src.integer(1, 10)));
        auto ev = hermitian_eigenvalues(a);
        double sum = 0;
        for (double x : ev) {
            sum += x;
        }
        CHECK(std::abs(sum - a.trace().real()) < 1e-10);
        CHECK(std::is_sorted(ev.rbegin(), ev.rend()));
    }
}

TEST_CASE("golden scalar identities") {
    GoldenScalar phi = GoldenScalar::phi();
    CHECK(phi * phi == phi + GoldenScalar(1));
    CHECK(phi * phi.inverse() == GoldenScalar(1));
    CHECK(phi.inverse() == phi - GoldenScalar(1));
    CHECK(phi.sign() == 1);
    CHECK(phi.conjugate().sign() == -1);
    CHECK(phi.field_norm() == Rational(-1));
    CHECK(std::abs(phi.to_double() - (1 + std::sqrt(5.0)) / 2) < 1e-15);
    CHECK_THROWS_AS(GoldenScalar(0).inverse(), std::domain_error);
    CHECK(pow(phi, -3) * pow(phi, 3) == GoldenScalar(1));
    CHECK((GoldenScalar(Rational(1, 2)) - GoldenScalar(Rational(0), Rational(1, 3))).to_string() == "1/2 - 1/3*sqrt5");
}

TEST_CASE("property: golden sign agrees with floating point away from zero") {
    gen::Source src(24);
    for (int trial = 0; trial < 500; trial++) {
        GoldenScalar x(Rational(src.integer(-50, 50), src.integer(1, 9)), Rational(src.integer(-50, 50), src.integer(1, 9)));
        double v = x.to_double();
        if (std::abs(v) > 1e-9) {
            CHECK(x.sign() == (v > 0 ? 1 : -1));
        }
        if (!(x == GoldenScalar(0))) {
            CHECK(x * x.inverse() == GoldenScalar(1));
        }
    }
}

TEST_CASE("golden matrices: determinant and exact-mode vectors") {
    GoldenMatrix m{{2, 1, 0}, {0, 1, 0}, {1, 0, 3}};
    CHECK(m.determinant() == GoldenScalar(6));
    CHECK(GoldenMatrix::identity(3) * m == m);
    RealVector v = RealVector::integers({1, 2, 3});
    RealVector w = m.apply(v);
    CHECK(w.is_exact());
    CHECK(w == RealVector::integers({4, 2, 10}));
    CHECK(exact_dot(v, w) == GoldenScalar(38));
    RealVector approx(RealVector::Approx{1.0, 2.0});
    CHECK_FALSE(approx.is_exact());
    CHECK_THROWS(exact_dot(approx, approx));
}
