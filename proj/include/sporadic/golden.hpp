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

#ifndef SPORADIC_GOLDEN_HPP
#define SPORADIC_GOLDEN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace sporadic {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element a + b*sqrt(5) of the golden field Q(sqrt 5).
class GoldenScalar {
   public:
    GoldenScalar() = default;
    GoldenScalar(std::int64_t integer) : a_(integer) {}  // NOLINT
    GoldenScalar(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

    /// (1 + sqrt 5) / 2.
    static GoldenScalar phi();
    static GoldenScalar sqrt5() { return GoldenScalar(Rational(0), Rational(1)); }

    const Rational &rational_part() const { return a_; }
    const Rational &sqrt5_part() const { return b_; }
    bool is_rational() const { return b_ == 0; }
    bool is_integer() const;

    /// Galois conjugate a - b*sqrt(5).
    GoldenScalar conjugate() const { return GoldenScalar(a_, -b_); }
    /// Field norm a^2 - 5 b^2, a rational.
    Rational field_norm() const { return a_ * a_ - 5 * b_ * b_; }
    /// Throws std::domain_error on zero.
    GoldenScalar inverse() const;
    /// -1, 0, or +1, decided exactly.
    int sign() const;
    double to_double() const;
    std::string to_string() const;

    GoldenScalar &operator+=(const GoldenScalar &o);
    GoldenScalar &operator-=(const GoldenScalar &o);
    GoldenScalar &operator*=(const GoldenScalar &o);
    GoldenScalar &operator/=(const GoldenScalar &o) { return *this *= o.inverse(); }

    friend GoldenScalar operator+(GoldenScalar x, const GoldenScalar &y) { return x += y; }
    friend GoldenScalar operator-(GoldenScalar x, const GoldenScalar &y) { return x -= y; }
    friend GoldenScalar operator*(GoldenScalar x, const GoldenScalar &y) { return x *= y; }
    friend GoldenScalar operator/(GoldenScalar x, const GoldenScalar &y) { return x /= y; }
    friend GoldenScalar operator-(const GoldenScalar &x) { return GoldenScalar(-x.a_, -x.b_); }
    friend bool operator==(const GoldenScalar &x, const GoldenScalar &y) { return x.a_ == y.a_ && x.b_ == y.b_; }

   private:
    Rational a_ = 0;
    Rational b_ = 0;
};

GoldenScalar pow(const GoldenScalar &x, int exponent);

/// Vector in R^n holding either exact golden-field entries or doubles.
/// Arithmetic between two exact vectors stays exact; anything touching an
/// approximate vector is approximate.
class RealVector {
   public:
    using Exact = std::vector<GoldenScalar>;
    using Approx = std::vector<double>;

    RealVector() = default;
    RealVector(Exact entries) : entries_(std::move(entries)) {}  // NOLINT
    RealVector(Approx entries) : entries_(std::move(entries)) {}  // NOLINT
    static RealVector integers(std::initializer_list<std::int64_t> values);

    bool is_exact() const { return std::holds_alternative<Exact>(entries_); }
    std::size_t dim() const;
    const Exact &exact() const { return std::get<Exact>(entries_); }
    const Approx &approx() const { return std::get<Approx>(entries_); }
    std::vector<double> to_doubles() const;

    friend bool operator==(const RealVector &a, const RealVector &b) { return a.entries_ == b.entries_; }

   private:
    std::variant<Exact, Approx> entries_;
};

/// Exact dot product; both operands must be exact.
GoldenScalar exact_dot(const RealVector &a, const RealVector &b);
double approx_dot(const RealVector &a, const RealVector &b);
RealVector negate(const RealVector &v);

/// Square matrix over the golden field.
class GoldenMatrix {
   public:
    GoldenMatrix() = default;
    explicit GoldenMatrix(std::size_t n) : n_(n), data_(n * n) {}
    GoldenMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static GoldenMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    GoldenScalar &operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const GoldenScalar &operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    GoldenMatrix transpose() const;
    GoldenScalar determinant() const;
    RealVector apply(const RealVector &v) const;

    friend GoldenMatrix operator*(const GoldenMatrix &a, const GoldenMatrix &b);
    friend GoldenMatrix operator-(const GoldenMatrix &a);
    friend bool operator==(const GoldenMatrix &a, const GoldenMatrix &b) { return a.n_ == b.n_ && a.data_ == b.data_; }

   private:
    std::size_t n_ = 0;
    std::vector<GoldenScalar> data_;
};

GoldenMatrix power(const GoldenMatrix &m, unsigned exponent);

}  // namespace sporadic

#endif
