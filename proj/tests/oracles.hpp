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

// Reference computations written independently of the library: plain nested
// vectors, naive loops, no shared helpers.

#ifndef SPORADIC_TESTS_ORACLES_HPP
#define SPORADIC_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "sporadic/matrix.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<C>(c, 0.0)); }

inline Mat eye(std::size_t n) {
    Mat m = zeros(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Mat mul(const Mat &a, const Mat &b) {
    Mat out = zeros(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < b[0].size(); j++) {
            for (std::size_t k = 0; k < b.size(); k++) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

inline Mat kron(const Mat &a, const Mat &b) {
    std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
    Mat out = zeros(ar * br, ac * bc);
    for (std::size_t i = 0; i < ar * br; i++) {
        for (std::size_t j = 0; j < ac * bc; j++) {
            out[i][j] = a[i / br][j / bc] * b[i % br][j % bc];
        }
    }
    return out;
}

inline Mat dagger(const Mat &a) {
    Mat out = zeros(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < a[0].size(); j++) {
            out[j][i] = std::conj(a[i][j]);
        }
    }
    return out;
}

inline C trace(const Mat &a) {
    C t = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        t += a[i][i];
    }
    return t;
}

inline Mat from(const sporadic::ComplexMatrix &m) {
    Mat out = zeros(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (std::size_t j = 0; j < m.cols(); j++) {
            out[i][j] = m(i, j);
        }
    }
    return out;
}

inline double max_diff(const Mat &a, const Mat &b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < a[0].size(); j++) {
            d = std::max(d, std::abs(a[i][j] - b[i][j]));
        }
    }
    return d;
}

inline double max_diff(const sporadic::ComplexMatrix &a, const Mat &b) { return max_diff(from(a), b); }

inline Mat sx() { return {{0, 1}, {1, 0}}; }
inline Mat sy() { return {{0, C(0, -1)}, {C(0, 1), 0}}; }
inline Mat sz() { return {{1, 0}, {0, -1}}; }

/// |<a|b>|^2 / (|a|^2 |b|^2) by direct summation.
inline double overlap(const std::vector<C> &a, const std::vector<C> &b) {
    C ip = 0;
    double na = 0, nb = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        ip += std::conj(a[k]) * b[k];
        na += std::norm(a[k]);
        nb += std::norm(b[k]);
    }
    return std::norm(ip) / (na * nb);
}

inline std::vector<C> amplitudes(const sporadic::StateVector &s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

/// Multiset of six-bit labels with m1 m2 + m3 m4 + m5 m6 odd, straight from the bits.
inline std::vector<int> odd_symplectic_labels() {
    std::vector<int> out;
    for (int v = 0; v < 64; v++) {
        int m[7];
        for (int k = 1; k <= 6; k++) {
            m[k] = (v >> (6 - k)) & 1;
        }
        if ((m[1] * m[2] + m[3] * m[4] + m[5] * m[6]) % 2 == 1) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace oracle

namespace gen {

/// Hand-rolled generators for property tests; every draw goes through one engine.
struct Source {
    explicit Source(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    double gauss() { return std::normal_distribution<double>()(rng); }

    std::vector<std::complex<double>> complex_vector(std::size_t n) {
        std::vector<std::complex<double>> v(n);
        for (auto &z : v) {
            double re = gauss();
            double im = gauss();
            z = {re, im};
        }
        return v;
    }

    sporadic::StateVector unit_state(std::size_t n) { return sporadic::StateVector(complex_vector(n)).normalized(); }

    /// Random Hermitian matrix with entries of order one.
    sporadic::ComplexMatrix hermitian(std::size_t n) {
        sporadic::ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; i++) {
            m(i, i) = gauss();
            for (std::size_t j = i + 1; j < n; j++) {
                double re = gauss();
                double im = gauss();
                m(i, j) = {re, im};
                m(j, i) = std::conj(m(i, j));
            }
        }
        return m;
    }

    sporadic::ComplexMatrix matrix(std::size_t r, std::size_t c) {
        sporadic::ComplexMatrix m(r, c);
        for (std::size_t i = 0; i < r; i++) {
            for (std::size_t j = 0; j < c; j++) {
                double re = gauss();
                double im = gauss();
                m(i, j) = {re, im};
            }
        }
        return m;
    }

    /// Unit-Frobenius-norm matrix.
    sporadic::ComplexMatrix unit_matrix(std::size_t r, std::size_t c) {
        sporadic::ComplexMatrix m = matrix(r, c);
        double n = 0;
        for (const auto &z : m.entries()) {
            n += std::norm(z);
        }
        n = std::sqrt(n);
        return m * std::complex<double>(1 / n, 0);
    }

    std::mt19937_64 rng;
};

}  // namespace gen

#endif
