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

#include "sporadic/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace sporadic {

namespace {

Json matrix_entries(const ComplexMatrix &m) {
    Json flat = Json::array();
    for (const auto &z : m.entries()) {
        flat.push_back(z.real());
        flat.push_back(z.imag());
    }
    return flat;
}

Json state_entries(const StateVector &s) {
    Json flat = Json::array();
    for (const auto &z : s.amplitudes()) {
        flat.push_back(z.real());
        flat.push_back(z.imag());
    }
    return flat;
}

Rational parse_rational(const std::string &s) {
    try {
        return Rational(s);
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(const std::string &s) {
    const char *begin = s.c_str();
    char *end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    if (s.empty() || end != begin + s.size()) {
        throw std::invalid_argument("malformed number '" + s + "'");
    }
    return v;
}

Json ensemble_to_json(const SicEnsemble &e) {
    Json j;
    j["dimension"] = e.d();
    j["provenance"] = e.provenance();
    Json projectors = Json::array();
    for (const auto &p : e.projectors()) {
        projectors.push_back(matrix_entries(p));
    }
    j["projectors"] = std::move(projectors);
    return j;
}

SicEnsemble ensemble_from_json(const Json &j) {
    int d = j.at("dimension").get<int>();
    if (d < 1) {
        throw std::invalid_argument("ensemble JSON: dimension must be positive");
    }
    const auto n = static_cast<std::size_t>(d);
    std::vector<ComplexMatrix> projectors;
    for (const auto &flat : j.at("projectors")) {
        if (flat.size() != 2 * n * n) {
            throw std::invalid_argument("ensemble JSON: projector has " + std::to_string(flat.size()) +
                                        " numbers, expected " + std::to_string(2 * n * n));
        }
        ComplexMatrix m(n, n);
        for (std::size_t r = 0; r < n; r++) {
            for (std::size_t c = 0; c < n; c++) {
                std::size_t k = 2 * (r * n + c);
                m(r, c) = Complex{flat[k].get<double>(), flat[k + 1].get<double>()};
            }
        }
        projectors.push_back(std::move(m));
    }
    return SicEnsemble(d, std::move(projectors), j.at("provenance").get<std::string>());
}

Json states_to_json(int dimension, const std::vector<StateVector> &states, const std::string &provenance) {
    Json j;
    j["dimension"] = dimension;
    j["provenance"] = provenance;
    Json arr = Json::array();
    for (const auto &s : states) {
        arr.push_back(state_entries(s));
    }
    j["states"] = std::move(arr);
    return j;
}

Json golden_to_json(const GoldenScalar &x) {
    if (x.is_integer()) {
        return Json(static_cast<std::int64_t>(numerator(x.rational_part())));
    }
    return Json::array({x.rational_part().str(), x.sqrt5_part().str()});
}

GoldenScalar golden_from_json(const Json &j) {
    if (j.is_number_integer()) {
        return GoldenScalar(j.get<std::int64_t>());
    }
    if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string()) {
        return GoldenScalar(parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()));
    }
    throw std::invalid_argument("golden scalar JSON must be an integer or a pair of rational strings");
}

Json line_set_to_json(const LineSet &set) {
    Json j;
    j["ambient_dimension"] = set.ambient_dimension;
    bool exact = set.is_exact();
    j["exact"] = exact;
    Json vectors = Json::array();
    for (const auto &v : set.vectors) {
        Json row = Json::array();
        if (v.is_exact()) {
            for (const auto &x : v.exact()) {
                row.push_back(golden_to_json(x));
            }
        } else {
            for (double x : v.approx()) {
                row.push_back(x);
            }
        }
        vectors.push_back(std::move(row));
    }
    j["vectors"] = std::move(vectors);
    j["common_cosine"] = set.common_cosine;
    j["cosine_squared"] = golden_to_json(set.cosine_squared);
    return j;
}

LineSet line_set_from_json(const Json &j) {
    LineSet set;
    set.ambient_dimension = j.at("ambient_dimension").get<std::size_t>();
    bool exact = j.at("exact").get<bool>();
    for (const auto &row : j.at("vectors")) {
        if (row.size() != set.ambient_dimension) {
            throw std::invalid_argument("line set JSON: vector length does not match ambient_dimension");
        }
        if (exact) {
            RealVector::Exact e;
            for (const auto &x : row) {
                e.push_back(golden_from_json(x));
            }
            set.vectors.emplace_back(std::move(e));
        } else {
            set.vectors.emplace_back(row.get<RealVector::Approx>());
        }
    }
    set.common_cosine = j.at("common_cosine").get<double>();
    set.cosine_squared = golden_from_json(j.at("cosine_squared"));
    return set;
}

std::string line_set_to_csv(const LineSet &set) {
    std::ostringstream out;
    for (std::size_t k = 0; k < set.ambient_dimension; k++) {
        out << (k ? "," : "") << "x" << k + 1;
    }
    out << "\n";
    for (const auto &v : set.vectors) {
        auto xs = v.to_doubles();
        for (std::size_t k = 0; k < xs.size(); k++) {
            out << (k ? "," : "") << format_double(xs[k]);
        }
        out << "\n";
    }
    return out.str();
}

Json probability_vector_to_json(const ProbabilityVector &p) {
    Json j;
    j["length"] = p.size();
    j["values"] = std::vector<double>(p.values().begin(), p.values().end());
    return j;
}

ProbabilityVector probability_vector_from_json(const Json &j) {
    auto values = j.at("values").get<std::vector<double>>();
    if (j.contains("length") && j.at("length").get<std::size_t>() != values.size()) {
        throw std::invalid_argument("probability JSON: length does not match values");
    }
    return ProbabilityVector(std::move(values));
}

Json incidence_to_json(const std::vector<std::vector<bool>> &m) {
    Json j;
    j["rows"] = m.size();
    j["cols"] = m.empty() ? 0 : m.front().size();
    Json rows = Json::array();
    for (const auto &row : m) {
        Json r = Json::array();
        for (bool b : row) {
            r.push_back(b ? 1 : 0);
        }
        rows.push_back(std::move(r));
    }
    j["matrix"] = std::move(rows);
    return j;
}

std::string incidence_to_csv(const std::vector<std::vector<bool>> &m) {
    std::string out;
    for (const auto &row : m) {
        for (std::size_t k = 0; k < row.size(); k++) {
            if (k) {
                out += ',';
            }
            out += row[k] ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

Json certificate_to_json(const Certificate &c, const Json &config) {
    Json j;
    j["subject"] = c.subject();
    j["config"] = config;
    Json checks = Json::array();
    for (const auto &chk : c.checks()) {
        Json e;
        e["name"] = chk.name;
        e["passed"] = chk.passed;
        e["max_deviation"] = format_double(chk.max_deviation);
        e["tolerance"] = format_double(chk.tolerance);
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["overall"] = c.overall();
    return j;
}

Certificate certificate_from_json(const Json &j) {
    Certificate c(j.at("subject").get<std::string>());
    for (const auto &e : j.at("checks")) {
        const Check &added = c.add(e.at("name").get<std::string>(), parse_double(e.at("max_deviation").get<std::string>()),
                                   parse_double(e.at("tolerance").get<std::string>()));
        if (added.passed != e.at("passed").get<bool>()) {
            throw std::invalid_argument("certificate JSON: check '" + added.name +
                                        "' has a passed flag inconsistent with its deviation");
        }
    }
    return c;
}

std::string certificate_to_csv(const Certificate &c, bool header) {
    std::ostringstream out;
    if (header) {
        out << "subject,name,passed,max_deviation,tolerance\n";
    }
    for (const auto &chk : c.checks()) {
        out << c.subject() << ',' << chk.name << ',' << (chk.passed ? "true" : "false") << ','
            << format_double(chk.max_deviation) << ',' << format_double(chk.tolerance) << '\n';
    }
    return out.str();
}

std::string certificate_to_text(const Certificate &c) {
    std::size_t width = 5;
    for (const auto &chk : c.checks()) {
        width = std::max(width, chk.name.size());
    }
    std::ostringstream out;
    out << c.subject() << ": " << (c.overall() ? "PASS" : "FAIL") << "\n";
    for (const auto &chk : c.checks()) {
        out << "  " << (chk.passed ? "ok  " : "FAIL") << "  " << std::left << std::setw(static_cast<int>(width))
            << chk.name << "  " << std::setw(24) << format_double(chk.max_deviation) << "  <= "
            << format_double(chk.tolerance) << "\n";
    }
    return out.str();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading '" + path + "'");
    }
    return buf.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing: " + std::strerror(errno));
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("error writing '" + path + "'");
    }
}

}  // namespace sporadic
