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

#ifndef SPORADIC_PAULI_HPP
#define SPORADIC_PAULI_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sporadic/matrix.hpp"

namespace sporadic {

/// Weyl-Heisenberg displacement index (l, alpha) in dimension d, reduced mod d.
class WhLabel {
   public:
    WhLabel(int d, int l, int alpha);

    int d() const { return d_; }
    int l() const { return l_; }
    int alpha() const { return alpha_; }

    bool operator==(const WhLabel &) const = default;

   private:
    int d_;
    int l_;
    int alpha_;
};

/// X|n> = |n+1 mod d>.
ComplexMatrix wh_shift(int d);
/// Z|n> = exp(2 pi i n / d)|n>.
ComplexMatrix wh_phase(int d);
/// D_{l,alpha} = (-exp(i pi / d))^{l alpha} X^l Z^alpha with l, alpha in [0, d).
ComplexMatrix displacement(const WhLabel &label);
/// All d^2 displacements ordered by (l, alpha) lexicographically.
std::vector<ComplexMatrix> all_displacements(int d);

/// Six-bit three-qubit Pauli label m1..m6. Bits pair up as (x-power, z-power)
/// per qubit; the integer value reads m1 as the most significant bit.
class PauliLabel {
   public:
    static constexpr int kCount = 64;

    constexpr PauliLabel() = default;
    explicit PauliLabel(int value);
    /// Parses a six-character string of '0'/'1', m1 first.
    static PauliLabel parse(std::string_view bits);
    static PauliLabel from_xz(int x_bits, int z_bits);

    int value() const { return value_; }
    /// m_k for k in 1..6.
    int bit(int k) const;
    /// x-powers of qubits 1..3 as a three-bit integer, qubit one most significant.
    int x_bits() const;
    int z_bits() const;
    std::string to_string() const;

    PauliLabel operator^(PauliLabel other) const { return PauliLabel(value_ ^ other.value_); }
    bool operator==(const PauliLabel &) const = default;
    auto operator<=>(const PauliLabel &) const = default;

   private:
    int value_ = 0;
};

/// sigma_x^{m1} sigma_z^{m2} (x) (-i)^{m3 m4} sigma_x^{m3} sigma_z^{m4} (x) (-i)^{m5 m6} sigma_x^{m5} sigma_z^{m6}.
///
/// The first factor carries no (-i) correction, so labels with m1 = m2 = 1
/// produce an anti-Hermitian operator.
ComplexMatrix three_qubit_pauli(PauliLabel label);
/// All 64 operators in label order.
std::vector<ComplexMatrix> all_three_qubit_paulis();

/// Global phase c with three_qubit_pauli(label) = c * (Hermitian Pauli tensor).
Complex first_factor_phase(PauliLabel label);

/// True iff m1 m2 + m3 m4 + m5 m6 is odd, i.e. the operator is antisymmetric.
bool is_antisymmetric(PauliLabel label);
std::vector<PauliLabel> antisymmetric_labels();

/// Checks X(x)X(x)X against sign * (XZZ)(ZXZ)(ZZX) entrywise; the true
/// identity holds for sign = -1.
bool verify_ghz_identity(double sign = -1.0, double tol = -1.0);

}  // namespace sporadic

#endif
