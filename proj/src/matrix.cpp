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

#include "sporadic/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace sporadic {

namespace {

std::atomic<double> g_default_tolerance{1e-10};

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(
            std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
            " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

double resolve_tol(double tol) { return tol > 0 ? tol : default_tolerance(); }

}  // namespace

double default_tolerance() { return g_default_tolerance.load(); }

void set_default_tolerance(double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    g_default_tolerance.store(tol);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("ComplexMatrix: entry count does not equal rows * cols");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw std::invalid_argument("trace of non-square matrix");
    }
    Complex t = 0;
    for (std::size_t k = 0; k < rows_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &v : data_) {
        v *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex v = a(r, k);
            if (v == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); c++) {
                out(r, c) += v * b(k, c);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); k++) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

double hermitian_deviation(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("hermitian_deviation: non-square matrix");
    }
    double worst = 0;
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = r; c < a.cols(); c++) {
            worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return worst;
}

ComplexMatrix power(const ComplexMatrix &a, unsigned exponent) {
    if (!a.is_square()) {
        throw std::invalid_argument("power of non-square matrix");
    }
    ComplexMatrix out = ComplexMatrix::identity(a.rows());
    for (unsigned k = 0; k < exponent; k++) {
        out = out * a;
    }
    return out;
}

Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (!a.is_square() || !b.is_square()) {
        throw std::invalid_argument("hs_inner: operands must be square");
    }
    require_same_shape(a, b, "hs_inner");
    Complex total = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); k++) {
        total += std::conj(ea[k]) * eb[k];
    }
    return total;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            Complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors) {
    if (factors.size() == 0) {
        throw std::invalid_argument("tensor: empty factor list");
    }
    auto it = factors.begin();
    ComplexMatrix out = *it++;
    for (; it != factors.end(); ++it) {
        out = tensor(out, *it);
    }
    return out;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    if (a.size() != n * n) {
        throw std::invalid_argument("symmetric_eigenvalues: size mismatch");
    }
    auto at = [&](std::size_t r, std::size_t c) -> double & { return a[r * n + c]; };
    double scale = 0;
    for (double v : a) {
        scale = std::max(scale, std::abs(v));
    }
    for (int sweep = 0; sweep < 100 && scale > 0; sweep++) {
        double off = 0;
        for (std::size_t p = 0; p < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                off += at(p, q) * at(p, q);
            }
        }
        if (std::sqrt(off) <= 1e-15 * scale * static_cast<double>(n)) {
            break;
        }
        for (std::size_t p = 0; p < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                double apq = at(p, q);
                if (std::abs(apq) < 1e-300) {
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (std::size_t k = 0; k < n; k++) {
                    double akp = at(k, p);
                    double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; k++) {
                    double apk = at(p, k);
                    double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; k++) {
        out[k] = at(k, k);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, double hermitian_tol) {
    if (!a.is_square()) {
        throw std::invalid_argument("hermitian_eigenvalues: non-square matrix");
    }
    double dev = hermitian_deviation(a);
    if (dev > resolve_tol(hermitian_tol)) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian (deviation " +
                                    std::to_string(dev) + ")");
    }
    std::size_t n = a.rows();
    std::size_t m = 2 * n;
    std::vector<double> real(m * m);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            // Symmetrize before realifying so rounding noise cannot break symmetry.
            Complex v = 0.5 * (a(r, c) + std::conj(a(c, r)));
            real[r * m + c] = v.real();
            real[(r + n) * m + (c + n)] = v.real();
            real[r * m + (c + n)] = -v.imag();
            real[(r + n) * m + c] = v.imag();
        }
    }
    auto doubled = symmetric_eigenvalues(std::move(real), m);
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; k++) {
        out[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
    }
    return out;
}

std::size_t operator_rank(std::span<const ComplexMatrix> operators, double tol) {
    if (operators.empty()) {
        throw std::invalid_argument("operator_rank: empty operator list");
    }
    std::size_t n = operators.size();
    for (const auto &op : operators) {
        require_same_shape(op, operators[0], "operator_rank");
    }
    std::vector<double> gram(n * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            double g = hs_inner(operators[i], operators[j]).real();
            gram[i * n + j] = g;
            gram[j * n + i] = g;
        }
    }
    auto spectrum = symmetric_eigenvalues(std::move(gram), n);
    double cutoff = resolve_tol(tol) * std::max(spectrum.front(), 0.0);
    return static_cast<std::size_t>(std::count_if(spectrum.begin(), spectrum.end(), [&](double v) { return v > cutoff; }));
}

namespace pauli_matrices {
ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return {{0, 1}, {1, 0}}; }
ComplexMatrix y() { return {{0, Complex{0, -1}}, {Complex{0, 1}, 0}}; }
ComplexMatrix z() { return {{1, 0}, {0, -1}}; }
}  // namespace pauli_matrices

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {}

StateVector::StateVector(std::initializer_list<Complex> amplitudes) : amps_(amplitudes) {}

double StateVector::norm() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

StateVector StateVector::normalized() const {
    double n = norm();
    if (n == 0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    StateVector out = *this;
    for (auto &a : out.amps_) {
        a /= n;
    }
    return out;
}

ComplexMatrix StateVector::projector() const {
    std::size_t d = dim();
    ComplexMatrix out(d, d);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            out(r, c) = amps_[r] * std::conj(amps_[c]);
        }
    }
    return out;
}

StateVector operator*(const ComplexMatrix &m, const StateVector &v) {
    if (m.cols() != v.dim()) {
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    }
    std::vector<Complex> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out[r] += m(r, c) * v[c];
        }
    }
    return StateVector(std::move(out));
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    Complex s = 0;
    for (std::size_t k = 0; k < a.dim(); k++) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

double fidelity(const StateVector &a, const StateVector &b) {
    double na = std::norm(inner(a, a));
    double nb = std::norm(inner(b, b));
    return std::norm(inner(a, b)) / std::sqrt(na * nb);
}

StateVector state_from_projector(const ComplexMatrix &projector) {
    if (!projector.is_square() || projector.rows() == 0) {
        throw std::invalid_argument("state_from_projector: expected a non-empty square matrix");
    }
    std::size_t d = projector.rows();
    std::size_t best = 0;
    for (std::size_t k = 1; k < d; k++) {
        if (projector(k, k).real() > projector(best, best).real()) {
            best = k;
        }
    }
    std::vector<Complex> col(d);
    for (std::size_t r = 0; r < d; r++) {
        col[r] = projector(r, best);
    }
    return StateVector(std::move(col)).normalized();
}

std::size_t vector_span_rank(std::span<const StateVector> states, double tol) {
    if (states.empty()) {
        throw std::invalid_argument("vector_span_rank: empty list");
    }
    std::size_t n = states.size();
    ComplexMatrix gram(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            gram(i, j) = inner(states[i], states[j]);
        }
    }
    auto spectrum = hermitian_eigenvalues(gram);
    double cutoff = resolve_tol(tol) * std::max(spectrum.front(), 0.0);
    return static_cast<std::size_t>(std::count_if(spectrum.begin(), spectrum.end(), [&](double v) { return v > cutoff; }));
}

}  // namespace sporadic
