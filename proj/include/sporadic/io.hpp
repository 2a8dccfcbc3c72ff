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

#ifndef SPORADIC_IO_HPP
#define SPORADIC_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sporadic/certificate.hpp"
#include "sporadic/duality.hpp"
#include "sporadic/lines.hpp"
#include "sporadic/sic.hpp"

namespace sporadic {

using Json = nlohmann::ordered_json;

/// Raised on file open/read/write failures.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Decimal with 17 significant digits, enough to round-trip any double.
std::string format_double(double x);
/// Throws std::invalid_argument on malformed input.
double parse_double(const std::string &s);

/// {dimension, provenance, projectors}; each projector is a flat row-major
/// array of interleaved real and imaginary parts.
Json ensemble_to_json(const SicEnsemble &e);
SicEnsemble ensemble_from_json(const Json &j);

/// {dimension, provenance, states} with the same interleaved layout.
Json states_to_json(int dimension, const std::vector<StateVector> &states, const std::string &provenance);

/// Exact scalars are integers when integral, otherwise ["a", "b"] meaning a + b*sqrt(5)
/// with a and b rational strings.
Json golden_to_json(const GoldenScalar &x);
GoldenScalar golden_from_json(const Json &j);

/// {ambient_dimension, exact, vectors, common_cosine, cosine_squared}.
Json line_set_to_json(const LineSet &set);
LineSet line_set_from_json(const Json &j);
/// One vector per row, float entries, header x1..xn.
std::string line_set_to_csv(const LineSet &set);

Json probability_vector_to_json(const ProbabilityVector &p);
ProbabilityVector probability_vector_from_json(const Json &j);

/// {rows, cols, matrix} with 0/1 entries.
Json incidence_to_json(const std::vector<std::vector<bool>> &m);
std::string incidence_to_csv(const std::vector<std::vector<bool>> &m);

/// {subject, config, checks, overall}; max_deviation and tolerance are
/// format_double strings.
Json certificate_to_json(const Certificate &c, const Json &config);
Certificate certificate_from_json(const Json &j);
/// Header name,passed,max_deviation,tolerance; subject column first.
std::string certificate_to_csv(const Certificate &c, bool header = true);
/// Fixed-width summary table.
std::string certificate_to_text(const Certificate &c);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

}  // namespace sporadic

#endif
