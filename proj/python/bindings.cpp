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


#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sporadic/duality.hpp"
#include "sporadic/lines.hpp"
#include "sporadic/pauli.hpp"
#include "sporadic/reports.hpp"
#include "sporadic/sic.hpp"

namespace py = pybind11;
using namespace sporadic;

namespace {

using Rows = std::vector<std::vector<Complex>>;

Rows to_rows(const ComplexMatrix &m) {
    Rows out(m.rows(), std::vector<Complex>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out[r][c] = m(r, c);
        }
    }
    return out;
}

ComplexMatrix from_rows(const Rows &rows) {
    const std::size_t n = rows.size();
    const std::size_t m = n ? rows.front().size() : 0;
    ComplexMatrix out(n, m);
    for (std::size_t r = 0; r < n; r++) {
        if (rows[r].size() != m) {
            throw std::invalid_argument("ragged matrix");
        }
        for (std::size_t c = 0; c < m; c++) {
            out(r, c) = rows[r][c];
        }
    }
    return out;
}

py::dict certificate_dict(const Certificate &c) {
    py::list checks;
    for (const auto &k : c.checks()) {
        py::dict d;
        d["name"] = k.name;
        d["passed"] = k.passed;
        d["max_deviation"] = k.max_deviation;
        d["tolerance"] = k.tolerance;
        checks.append(d);
    }
    py::dict out;
    out["subject"] = c.subject();
    out["checks"] = checks;
    out["overall"] = c.overall();
    return out;
}

Field field_arg(const std::string &name) {
    try {
        return parse_field(name);
    } catch (const std::invalid_argument &e) {
        throw py::value_error(e.what());
    }
}

}  // namespace

PYBIND11_MODULE(_sporadic, m) {
    m.doc() = "Sporadic SICs, their duals and the exceptional line systems";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<OrbitCollapse>(m, "OrbitCollapse", PyExc_RuntimeError);

    py::class_<SicEnsemble>(m, "SicEnsemble")
        .def_property_readonly("d", &SicEnsemble::d)
        .def_property_readonly("provenance", &SicEnsemble::provenance)
        .def("__len__", &SicEnsemble::size)
        .def("projector", [](const SicEnsemble &e, std::size_t i) { return to_rows(e.projector(i)); })
        .def("state", [](const SicEnsemble &e, std::size_t i) {
            auto a = e.state(i).amplitudes();
            return std::vector<Complex>(a.begin(), a.end());
        })
        .def("gram", [](const SicEnsemble &e) { return to_rows(e.gram()); })
        .def("to_json", [](const SicEnsemble &e) { return ensemble_to_json(e).dump(); })
        .def("__repr__", [](const SicEnsemble &e) {
            return "<SicEnsemble d=" + std::to_string(e.d()) + " n=" + std::to_string(e.size()) + " " + e.provenance() + ">";
        });

    m.def("families", [] {
        std::vector<std::string> out;
        for (Family f : all_families()) {
            out.push_back(to_string(f));
        }
        return out;
    });
    m.def("build_sic", [](const std::string &family) { return build_sic(parse_family(family)); }, py::arg("family"));
    m.def("ensemble_from_json", [](const std::string &text) { return ensemble_from_json(Json::parse(text)); });
    m.def("verify_sic", [](const SicEnsemble &e, double tol) { return certificate_dict(verify_sic(e, tol)); },
          py::arg("ensemble"), py::arg("tolerance") = 1e-10);
    m.def(
        "verify",
        [](const std::string &family, double tol, std::uint64_t seed) {
            Family f = parse_family(family);
            Certificate c;
            {
                py::gil_scoped_release release;
                c = verify_family(f, tol, seed);
            }
            return certificate_dict(c);
        },
        py::arg("family"), py::arg("tolerance") = 1e-10, py::arg("seed") = 0);
    m.def(
        "report_all",
        [](double tol, std::uint64_t seed) {
            RunConfig c;
            c.tolerance = tol;
            c.seed = seed;
            c.validate();
            std::string out;
            {
                py::gil_scoped_release release;
                out = render_report(run_report_all(c), c);
            }
            return out;
        },
        py::arg("tolerance") = 1e-10, py::arg("seed") = 0, "Combined report of every family as a JSON string.");

    m.def("represent", [](const SicEnsemble &e, const Rows &rho) {
        auto p = represent(e, from_rows(rho));
        return std::vector<double>(p.values().begin(), p.values().end());
    });
    m.def("represent_state", [](const SicEnsemble &e, const std::vector<Complex> &psi) {
        auto p = represent(e, StateVector(psi));
        return std::vector<double>(p.values().begin(), p.values().end());
    });
    m.def("reconstruct", [](const SicEnsemble &e, std::vector<double> p) {
        return to_rows(reconstruct(e, ProbabilityVector(std::move(p))));
    });
    m.def("shannon_entropy", [](const std::vector<double> &p) { return shannon_entropy(p); });
    m.def("n_eff", [](const std::vector<double> &p) { return n_eff(p); });
    m.def("n_eff_pure", &n_eff_pure);
    m.def("count_zeros", [](const std::vector<double> &p, double tol) { return count_zeros(p, tol); }, py::arg("p"),
          py::arg("tolerance") = kZeroThreshold);
    m.def("max_zero_bound", [](int d, const std::string &field) { return max_zero_bound(d, field_arg(field)); });
    m.def("gerzon_bound", [](int d, const std::string &field) { return gerzon_bound(d, field_arg(field)); });
    m.def("welch_angle", [](int d, const std::string &field) { return welch_angle(d, field_arg(field)); });
    m.def("fibonacci_lucas_dims", &fibonacci_lucas_dims, py::arg("k_max"));

    m.def("mub_states", [] {
        std::vector<std::vector<Complex>> out;
        for (const auto &s : mub_dual().states) {
            out.emplace_back(s.amplitudes().begin(), s.amplitudes().end());
        }
        return out;
    });
    m.def("twin_incidence", [] {
        TwinIncidence t = twin_incidence();
        py::dict d;
        d["zero_pattern"] = t.zero_pattern;
        d["row_counts"] = t.row_counts;
        d["column_counts"] = t.column_counts;
        d["nonzero_overlap"] = t.nonzero_overlap;
        std::vector<int> labels;
        for (auto l : t.fiducial_zero_labels) {
            labels.push_back(l.value());
        }
        d["fiducial_zero_labels"] = labels;
        return d;
    });

    m.def("octonion_mul", [](int a, int b) {
        OctonionUnit u = octonion_mul(make_unit(a), make_unit(b));
        return std::make_pair(u.sign, u.index);
    }, "Product of unit octonions e_a e_b as (sign, index); index 0 is the real unit.");
    m.def("is_antisymmetric", [](int label) { return is_antisymmetric(PauliLabel(label)); });
    m.def("antisymmetric_labels", [] {
        std::vector<int> out;
        for (auto l : antisymmetric_labels()) {
            out.push_back(l.value());
        }
        return out;
    });
    m.def("antiflag_to_pauli", [](int line, int point) { return antiflag_to_pauli(line, point).value(); });
    m.def("fano_lines", [] { return fano_plane().lines; });
    m.def("line_set", [](const std::string &family) {
        Family f = parse_family(family);
        LineSet s;
        switch (f) {
            case Family::Fano28:
                s = antiflag_lines_28().lines;
                break;
            case Family::So828:
                s = so8_lines_28();
                break;
            case Family::Icosahedron:
                s = icosahedron_orbit().lines;
                break;
            case Family::TrineR2:
                s = trine_r2();
                break;
            default:
                throw UsageError("'" + family + "' is not a line-set family");
        }
        std::vector<std::vector<double>> out;
        for (const auto &v : s.vectors) {
            out.push_back(v.to_doubles());
        }
        return out;
    });
}
