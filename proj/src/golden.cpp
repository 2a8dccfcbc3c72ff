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

#include "sporadic/golden.hpp"

#include <cmath>
#include <stdexcept>

namespace sporadic {

namespace {

int rational_sign(const Rational &r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

GoldenScalar GoldenScalar::phi() { return GoldenScalar(Rational(1, 2), Rational(1, 2)); }

bool GoldenScalar::is_integer() const { return b_ == 0 && denominator(a_) == 1; }

GoldenScalar GoldenScalar::inverse() const {
    Rational n = field_norm();
    if (n == 0) {
        throw std::domain_error("GoldenScalar: division by zero");
    }
    return GoldenScalar(a_ / n, -b_ / n);
}

int GoldenScalar::sign() const {
    int sa = rational_sign(a_);
    int sb = rational_sign(b_);
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    // Opposite signs: whichever of a^2 and 5b^2 is larger wins.
    int cmp = rational_sign(a_ * a_ - 5 * b_ * b_);
    return cmp * sa;
}

double GoldenScalar::to_double() const {
    return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(5.0);
}

std::string GoldenScalar::to_string() const {
    if (b_ == 0) {
        return a_.str();
    }
    std::string out = a_ == 0 ? std::string() : a_.str() + (b_ > 0 ? " + " : " - ");
    Rational mag = b_ > 0 || a_ == 0 ? b_ : Rational(-b_);
    out += mag.str() + "*sqrt5";
    return out;
}

GoldenScalar &GoldenScalar::operator+=(const GoldenScalar &o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

GoldenScalar &GoldenScalar::operator-=(const GoldenScalar &o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

GoldenScalar &GoldenScalar::operator*=(const GoldenScalar &o) {
    Rational a = a_ * o.a_ + 5 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

GoldenScalar pow(const GoldenScalar &x, int exponent) {
    GoldenScalar base = exponent < 0 ? x.inverse() : x;
    unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    GoldenScalar out(1);
    while (e > 0) {
        if (e & 1u) {
            out *= base;
        }
        base *= base;
        e >>= 1;
    }
    return out;
}

RealVector RealVector::integers(std::initializer_list<std::int64_t> values) {
    Exact out;
    out.reserve(values.size());
    for (auto v : values) {
        out.emplace_back(v);
    }
    return RealVector(std::move(out));
}

std::size_t RealVector::dim() const {
    return std::visit([](const auto &v) { return v.size(); }, entries_);
}

std::vector<double> RealVector::to_doubles() const {
    if (!is_exact()) {
        return approx();
    }
    std::vector<double> out;
    out.reserve(dim());
    for (const auto &x : exact()) {
        out.push_back(x.to_double());
    }
    return out;
}

GoldenScalar exact_dot(const RealVector &a, const RealVector &b) {
    if (!a.is_exact() || !b.is_exact()) {
        throw std::invalid_argument("exact_dot: both vectors must be exact");
    }
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("exact_dot: dimension mismatch");
    }
    GoldenScalar s;
    for (std::size_t k = 0; k < a.dim(); k++) {
        s += a.exact()[k] * b.exact()[k];
    }
    return s;
}

double approx_dot(const RealVector &a, const RealVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("approx_dot: dimension mismatch");
    }
    auto x = a.to_doubles();
    auto y = b.to_doubles();
    double s = 0;
    for (std::size_t k = 0; k < x.size(); k++) {
        s += x[k] * y[k];
    }
    return s;
}

RealVector negate(const RealVector &v) {
    if (v.is_exact()) {
        RealVector::Exact out;
        for (const auto &x : v.exact()) {
            out.push_back(-x);
        }
        return out;
    }
    RealVector::Approx out;
    for (double x : v.approx()) {
        out.push_back(-x);
    }
    return out;
}

GoldenMatrix::GoldenMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto &row : rows) {
        if (row.size() != n_) {
            throw std::invalid_argument("GoldenMatrix: initializer must be square");
        }
        for (auto v : row) {
            data_.emplace_back(v);
        }
    }
}

GoldenMatrix GoldenMatrix::identity(std::size_t n) {
    GoldenMatrix m(n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

GoldenMatrix GoldenMatrix::transpose() const {
    GoldenMatrix out(n_);
    for (std::size_t r = 0; r < n_; r++) {
        for (std::size_t c = 0; c < n_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

GoldenScalar GoldenMatrix::determinant() const {
    GoldenMatrix m = *this;
    GoldenScalar det(1);
    for (std::size_t col = 0; col < n_; col++) {
        std::size_t pivot = col;
        while (pivot < n_ && m(pivot, col) == GoldenScalar()) {
            pivot++;
        }
        if (pivot == n_) {
            return GoldenScalar();
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n_; c++) {
                std::swap(m(pivot, c), m(col, c));
            }
            det = -det;
        }
        det *= m(col, col);
        GoldenScalar inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < n_; r++) {
            GoldenScalar f = m(r, col) * inv;
            if (f == GoldenScalar()) {
                continue;
            }
            for (std::size_t c = col; c < n_; c++) {
                m(r, c) -= f * m(col, c);
            }
        }
    }
    return det;
}

RealVector GoldenMatrix::apply(const RealVector &v) const {
    if (!v.is_exact() || v.dim() != n_) {
        throw std::invalid_argument("GoldenMatrix::apply: expected an exact vector of matching dimension");
    }
    RealVector::Exact out(n_);
    for (std::size_t r = 0; r < n_; r++) {
        for (std::size_t c = 0; c < n_; c++) {
            out[r] += (*this)(r, c) * v.exact()[c];
        }
    }
    return out;
}

GoldenMatrix operator*(const GoldenMatrix &a, const GoldenMatrix &b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("GoldenMatrix product: size mismatch");
    }
    GoldenMatrix out(a.n_);
    for (std::size_t r = 0; r < a.n_; r++) {
        for (std::size_t k = 0; k < a.n_; k++) {
            if (a(r, k) == GoldenScalar()) {
                continue;
            }
            for (std::size_t c = 0; c < a.n_; c++) {
                out(r, c) += a(r, k) * b(k, c);
            }
        }
    }
    return out;
}

GoldenMatrix operator-(const GoldenMatrix &a) {
    GoldenMatrix out = a;
    for (auto &x : out.data_) {
        x = -x;
    }
    return out;
}

GoldenMatrix power(const GoldenMatrix &m, unsigned exponent) {
    GoldenMatrix out = GoldenMatrix::identity(m.size());
    for (unsigned k = 0; k < exponent; k++) {
        out = out * m;
    }
    return out;
}

}  // namespace sporadic
