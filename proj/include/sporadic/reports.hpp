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

#ifndef SPORADIC_REPORTS_HPP
#define SPORADIC_REPORTS_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sporadic/certificate.hpp"
#include "sporadic/io.hpp"
#include "sporadic/sic.hpp"

namespace sporadic {

/// Bad command-line input: unknown family or format, out-of-range option.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class Family {
    QubitPlus,
    QubitMinus,
    HesseCoxeter,
    HesseOrbit,
    HoggarPlus,
    HoggarMinus,
    MubDual,
    TwinIncidence,
    Fano28,
    So828,
    Icosahedron,
    TrineR2,
    Bounds,
};

/// Every family in report order.
const std::vector<Family> &all_families();
std::string to_string(Family f);
/// Throws UsageError on an unknown name.
Family parse_family(std::string_view name);
bool is_sic_family(Family f);
/// Throws UsageError unless is_sic_family(f).
SicEnsemble build_sic(Family f);

enum class Format { Json, Csv, Text };
std::string to_string(Format f);
Format parse_format(std::string_view name);

enum ExitStatus : int {
    kExitPass = 0,
    kExitCheckFailure = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

struct RunConfig {
    Family family = Family::HesseOrbit;
    double tolerance = 1e-10;
    std::uint64_t seed = 0;
    int restarts = 64;
    std::string output;  ///< empty means standard output
    Format format = Format::Json;

    /// Throws UsageError unless tolerance > 0 and restarts >= 1.
    void validate() const;
};

/// Echo of the configuration written into certificates; no paths or timestamps.
Json config_to_json(const RunConfig &config, bool with_family = true);

/// Zero threshold for orthogonality counts, independent of the configured tolerance.
inline constexpr double kCountThreshold = 1e-9;
/// Tolerance for checks on numerically searched minima.
inline constexpr double kSearchTolerance = 1e-6;

/// Builds the family and runs its full check suite.
Certificate verify_family(Family family, double tolerance, std::uint64_t seed);

std::string render_certificate(const Certificate &c, const RunConfig &config);

struct VerifyOutcome {
    Certificate certificate;
    int exit_status = kExitCheckFailure;
};
/// Verifies config.family and writes the rendered certificate to config.output
/// (or out). Throws IoError when the output cannot be written.
VerifyOutcome run_verify(const RunConfig &config, std::ostream &out);

struct AggregateReport {
    std::vector<Certificate> sections;  ///< one per family, in all_families() order
    Certificate combined;               ///< every check, prefixed "<family>/"
};
/// Verifies every family concurrently; a throwing family becomes a failed
/// "construction" check in its section.
AggregateReport run_report_all(const RunConfig &config);
std::string render_report(const AggregateReport &report, const RunConfig &config);

struct MinimizerRow {
    double entropy;
    std::size_t dual_index;  ///< closest state of the dual structure
    double fidelity;
};

struct EntropySearchReport {
    std::string family;
    int dimension = 0;
    double minimum_entropy = 0;
    double expected_entropy = 0;  ///< log2(d (d + 1) / 2)
    std::size_t local_minima = 0;
    std::vector<MinimizerRow> minimizers;  ///< global minimizers, ordered by dual_index
    Certificate certificate;
};
/// Runs entropy_min_search with config.seed and config.restarts and matches the
/// global minimizers against the dual structure (antipodal states for d = 2,
/// the MUB states for d = 3, the twin ensemble for d = 8).
EntropySearchReport entropy_search_command(const RunConfig &config);
std::string render_entropy_report(const EntropySearchReport &report, const RunConfig &config);

/// Summary of a family's construction (sizes, dimension, provenance).
Json build_summary(Family family);
/// Full data of a family: ensemble, state list, line set, incidence or bounds table.
Json export_json(Family family);
/// Float CSV of a line-set family; throws UsageError for other families.
std::string export_csv(Family family);
/// Incidence matrix for mub-dual (SIC x MUB), twin-incidence (plus x minus) and
/// fano-28 (line x point); throws UsageError otherwise.
std::vector<std::vector<bool>> family_incidence(Family family);

struct BoundsRow {
    int d;
    std::string field;
    std::int64_t gerzon;
    std::int64_t zero_bound;  ///< -1 where undefined
    double welch;             ///< NaN where undefined
};
std::vector<BoundsRow> bounds_table(const std::vector<int> &dims);
std::string render_bounds(const std::vector<BoundsRow> &rows, Format format);

/// Writes document to config.output, or to out when no output path is set.
void emit(const std::string &document, const RunConfig &config, std::ostream &out);

}  // namespace sporadic

#endif
