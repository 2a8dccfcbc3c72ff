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

#ifndef SPORADIC_FIELD_HPP
#define SPORADIC_FIELD_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sporadic {

/// Scalar field of the ambient space for the counting bounds.
/// Octonionic3 denotes the octonionic projective plane and is only meaningful at d = 3.
enum class Field { Real, Complex, Octonionic3 };

inline std::string to_string(Field f) {
    switch (f) {
        case Field::Real:
            return "real";
        case Field::Complex:
            return "complex";
        case Field::Octonionic3:
            return "octonionic3";
    }
    return "unknown";
}

inline Field parse_field(std::string_view s) {
    if (s == "real") {
        return Field::Real;
    }
    if (s == "complex") {
        return Field::Complex;
    }
    if (s == "octonionic3") {
        return Field::Octonionic3;
    }
    throw std::invalid_argument("unknown field '" + std::string(s) + "'");
}

}  // namespace sporadic

#endif
