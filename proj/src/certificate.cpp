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

#include "sporadic/certificate.hpp"

#include <algorithm>
#include <cmath>

namespace sporadic {

const Check &Certificate::add(std::string name, double deviation, double tolerance) {
    bool ok = !std::isnan(deviation) && deviation <= tolerance;
    checks_.push_back(Check{std::move(name), ok, deviation, tolerance});
    return checks_.back();
}

const Check &Certificate::add_exact(std::string name, bool holds) {
    checks_.push_back(Check{std::move(name), holds, holds ? 0.0 : 1.0, 0.0});
    return checks_.back();
}

void Certificate::merge(const Certificate &other, const std::string &prefix) {
    for (const auto &c : other.checks_) {
        Check copy = c;
        copy.name = prefix + copy.name;
        checks_.push_back(std::move(copy));
    }
}

const Check *Certificate::find(const std::string &name) const {
    auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check &c) { return c.name == name; });
    return it == checks_.end() ? nullptr : &*it;
}

bool Certificate::overall() const {
    return !checks_.empty() && std::all_of(checks_.begin(), checks_.end(), [](const Check &c) { return c.passed; });
}

}  // namespace sporadic
