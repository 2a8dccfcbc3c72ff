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

#ifndef SPORADIC_CERTIFICATE_HPP
#define SPORADIC_CERTIFICATE_HPP

#include <string>
#include <vector>

namespace sporadic {

struct Check {
    std::string name;
    bool passed = false;
    double max_deviation = 0;
    double tolerance = 0;
};

/// Named checks for one subject. overall() is the conjunction of all checks;
/// an empty certificate is not considered passing.
class Certificate {
   public:
    Certificate() = default;
    explicit Certificate(std::string subject) : subject_(std::move(subject)) {}

    const std::string &subject() const { return subject_; }
    const std::vector<Check> &checks() const { return checks_; }

    /// Passes iff deviation <= tolerance (NaN deviations fail).
    const Check &add(std::string name, double deviation, double tolerance);
    /// Exact predicate: deviation 0 on success and 1 on failure, tolerance 0.
    const Check &add_exact(std::string name, bool holds);
    /// Appends every check of another certificate, prefixing names.
    void merge(const Certificate &other, const std::string &prefix = "");

    const Check *find(const std::string &name) const;
    bool overall() const;

   private:
    std::string subject_;
    std::vector<Check> checks_;
};

}  // namespace sporadic

#endif
