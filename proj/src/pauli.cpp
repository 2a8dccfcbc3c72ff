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

#include "sporadic/pauli.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sporadic {

namespace {

int reduce(int v, int d) { return ((v % d) + d) % d; }

ComplexMatrix single_qubit_factor(int x, int z, bool apply_minus_i) {
    ComplexMatrix m = pauli_matrices::identity();
    if (x) {
        m = m * pauli_matrices::x();
    }
    if (z) {
        m = m * pauli_matrices::z();
    }
    if (apply_minus_i && x && z) {
        m *= Complex{0, -1};
    }
    return m;
}

}  // namespace

WhLabel::WhLabel(int d, int l, int alpha) : d_(d) {
    if (d < 2) {
        throw std::invalid_argument("WhLabel: dimension must be at least 2");
    }
    l_ = reduce(l, d);
    alpha_ = reduce(alpha, d);
}

ComplexMatrix wh_shift(int d) {
    if (d < 2) {
        throw std::invalid_argument("wh_shift: dimension must be at least 2");
    }
    ComplexMatrix x(d, d);
    for (int n = 0; n < d; n++) {
        x((n + 1) % d, n) = 1.0;
    }
    return x;
}

ComplexMatrix wh_phase(int d) {
    if (d < 2) {
        throw std::invalid_argument("wh_phase: dimension must be at least 2");
    }
    ComplexMatrix z(d, d);
    for (int n = 0; n < d; n++) {
        z(n, n) = std::polar(1.0, 2 * std::numbers::pi * n / d);
    }
    return z;
}

ComplexMatrix displacement(const WhLabel &label) {
    int d = label.d();
    // (-e^{i pi/d})^k = e^{i pi k (d + 1) / d}; reduce the exponent mod 2d first.
    int k = (label.l() * label.alpha()) % (2 * d);
    Complex phase = std::polar(1.0, std::numbers::pi * k * (d + 1) / d);
    return phase * (power(wh_shift(d), label.l()) * power(wh_phase(d), label.alpha()));
}

std::vector<ComplexMatrix> all_displacements(int d) {
    std::vector<ComplexMatrix> out;
    out.reserve(d * d);
    for (int l = 0; l < d; l++) {
        for (int a = 0; a < d; a++) {
            out.push_back(displacement(WhLabel(d, l, a)));
        }
    }
    return out;
}

PauliLabel::PauliLabel(int value) : value_(value) {
    if (value < 0 || value >= kCount) {
        throw std::invalid_argument("PauliLabel: value out of range [0, 64)");
    }
}

PauliLabel PauliLabel::parse(std::string_view bits) {
    if (bits.size() != 6) {
        throw std::invalid_argument("PauliLabel: expected six bits, got '" + std::string(bits) + "'");
    }
    int v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("PauliLabel: non-binary character in '" + std::string(bits) + "'");
        }
        v = (v << 1) | (c - '0');
    }
    return PauliLabel(v);
}

PauliLabel PauliLabel::from_xz(int x_bits, int z_bits) {
    if (x_bits < 0 || x_bits > 7 || z_bits < 0 || z_bits > 7) {
        throw std::invalid_argument("PauliLabel::from_xz: bit groups must be in [0, 8)");
    }
    int v = 0;
    for (int q = 0; q < 3; q++) {
        int shift = 2 - q;
        v = (v << 2) | (((x_bits >> shift) & 1) << 1) | ((z_bits >> shift) & 1);
    }
    return PauliLabel(v);
}

int PauliLabel::bit(int k) const {
    if (k < 1 || k > 6) {
        throw std::out_of_range("PauliLabel::bit: index must be in 1..6");
    }
    return (value_ >> (6 - k)) & 1;
}

int PauliLabel::x_bits() const { return (bit(1) << 2) | (bit(3) << 1) | bit(5); }

int PauliLabel::z_bits() const { return (bit(2) << 2) | (bit(4) << 1) | bit(6); }

std::string PauliLabel::to_string() const {
    std::string s(6, '0');
    for (int k = 1; k <= 6; k++) {
        s[k - 1] = static_cast<char>('0' + bit(k));
    }
    return s;
}

ComplexMatrix three_qubit_pauli(PauliLabel label) {
    return tensor({single_qubit_factor(label.bit(1), label.bit(2), false),
                   single_qubit_factor(label.bit(3), label.bit(4), true),
                   single_qubit_factor(label.bit(5), label.bit(6), true)});
}

std::vector<ComplexMatrix> all_three_qubit_paulis() {
    std::vector<ComplexMatrix> out;
    out.reserve(PauliLabel::kCount);
    for (int v = 0; v < PauliLabel::kCount; v++) {
        out.push_back(three_qubit_pauli(PauliLabel(v)));
    }
    return out;
}

Complex first_factor_phase(PauliLabel label) {
    // sigma_x sigma_z = -i sigma_y; the other two factors are already Hermitian.
    return label.bit(1) && label.bit(2) ? Complex{0, -1} : Complex{1, 0};
}

bool is_antisymmetric(PauliLabel label) { return (std::popcount(static_cast<unsigned>(label.x_bits() & label.z_bits())) & 1) == 1; }

std::vector<PauliLabel> antisymmetric_labels() {
    std::vector<PauliLabel> out;
    for (int v = 0; v < PauliLabel::kCount; v++) {
        if (is_antisymmetric(PauliLabel(v))) {
            out.emplace_back(v);
        }
    }
    return out;
}

bool verify_ghz_identity(double sign, double tol) {
    using namespace pauli_matrices;
    double t = tol > 0 ? tol : default_tolerance();
    ComplexMatrix lhs = tensor({x(), x(), x()});
    ComplexMatrix rhs = tensor({x(), z(), z()}) * tensor({z(), x(), z()}) * tensor({z(), z(), x()});
    rhs *= sign;
    return max_abs_diff(lhs, rhs) <= t;
}

}  // namespace sporadic
