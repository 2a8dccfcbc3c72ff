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

#ifndef SPORADIC_MATRIX_HPP
#define SPORADIC_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sporadic {

using Complex = std::complex<double>;

/// Default algebraic tolerance used by every check unless a caller overrides it.
double default_tolerance();
void set_default_tolerance(double tol);

/// Dense row-major complex matrix. Sized for the small spaces in this library
/// (dimension <= 64); no attempt is made at blocking or vectorization.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n, n); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator-(ComplexMatrix a) { return a *= Complex{-1.0, 0.0}; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b. Throws on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
/// Largest entrywise modulus of A - A^dagger.
double hermitian_deviation(const ComplexMatrix &a);
ComplexMatrix power(const ComplexMatrix &a, unsigned exponent);

/// tr(A^dagger B).
Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);
/// Kronecker product; the left factor indexes the most significant block.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors);

/// Real spectrum of a Hermitian matrix, sorted descending. Computed by cyclic
/// Jacobi rotations on the 2n x 2n real symmetric realification, whose
/// spectrum is that of A with every multiplicity doubled.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, double hermitian_tol = -1.0);
/// Eigenvalues of a real symmetric matrix given row-major; sorted descending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

/// Dimension of the real span of a list of operators, from the spectrum of
/// their Gram matrix Re tr(A_i^dagger A_j) thresholded at tol * largest.
std::size_t operator_rank(std::span<const ComplexMatrix> operators, double tol = -1.0);

namespace pauli_matrices {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli_matrices

/// Vector of amplitudes in C^d.
class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(std::vector<Complex> amplitudes);
    StateVector(std::initializer_list<Complex> amplitudes);

    std::size_t dim() const { return amps_.size(); }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }
    Complex &operator[](std::size_t i) { return amps_[i]; }
    std::span<const Complex> amplitudes() const { return amps_; }

    double norm() const;
    StateVector normalized() const;
    /// |psi><psi| (not renormalized).
    ComplexMatrix projector() const;

    friend StateVector operator*(const ComplexMatrix &m, const StateVector &v);

   private:
    std::vector<Complex> amps_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVector &a, const StateVector &b);
/// |<a|b>|^2 / (<a|a><b|b>); phase-blind comparison of the two lines.
double fidelity(const StateVector &a, const StateVector &b);
/// Recovers a unit vector spanning the range of a rank-1 projector.
StateVector state_from_projector(const ComplexMatrix &projector);
/// Dimension of the complex span of a list of vectors.
std::size_t vector_span_rank(std::span<const StateVector> states, double tol = -1.0);

}  // namespace sporadic

#endif
