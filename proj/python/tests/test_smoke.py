# Copyright 2026 The Sporadic SIC Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json
import math

import pytest

import sporadic


def test_families():
    names = sporadic.families()
    assert len(names) == 13
    assert "hesse-orbit" in names and "bounds" in names


def test_verify_hesse():
    cert = sporadic.verify("hesse-orbit")
    assert cert["subject"] == "hesse-orbit"
    assert cert["overall"]
    assert all(c["max_deviation"] < 1e-10 for c in cert["checks"])


def test_unknown_family():
    with pytest.raises(ValueError):
        sporadic.verify("no-such-family")


def test_ensemble_round_trip():
    e = sporadic.build_sic("hoggar-minus")
    assert len(e) == 64 and e.d == 8
    back = sporadic.ensemble_from_json(e.to_json())
    assert back.projector(5) == e.projector(5)
    assert sporadic.verify_sic(back)["overall"]


def test_represent_reconstruct():
    e = sporadic.build_sic("hesse-orbit")
    p = sporadic.represent(e, e.projector(0))
    assert p[0] == pytest.approx(1 / 3)
    assert all(x == pytest.approx(1 / 12) for x in p[1:])
    rho = sporadic.reconstruct(e, p)
    for r in range(3):
        for c in range(3):
            assert abs(rho[r][c] - e.projector(0)[r][c]) < 1e-12


def test_mub_entropy():
    e = sporadic.build_sic("hesse-orbit")
    states = sporadic.mub_states()
    assert len(states) == 12
    for s in states:
        p = sporadic.represent_state(e, s)
        assert sporadic.count_zeros(p) == 3
        assert sporadic.shannon_entropy(p) == pytest.approx(math.log2(6))


def test_bounds():
    assert sporadic.gerzon_bound(7, "real") == 28
    assert sporadic.gerzon_bound(3, "octonionic3") == 27
    assert sporadic.max_zero_bound(23, "real") == 176
    assert sporadic.max_zero_bound(8, "complex") == 28
    assert sporadic.n_eff_pure(8) == 36
    assert sporadic.fibonacci_lucas_dims(5) == [4, 8, 19, 48, 124]
    with pytest.raises(ValueError):
        sporadic.gerzon_bound(3, "quaternionic")


def test_octonions_and_labels():
    assert sporadic.octonion_mul(1, 4) == (1, 5)
    assert sporadic.octonion_mul(2, 1) == (-1, 3)
    labels = sporadic.antisymmetric_labels()
    assert len(labels) == 28
    images = set()
    for line_index, line in enumerate(sporadic.fano_lines()):
        for point in range(1, 8):
            if point not in line:
                images.add(sporadic.antiflag_to_pauli(line_index, point))
    assert sorted(images) == labels


def test_twin_incidence():
    t = sporadic.twin_incidence()
    assert set(t["row_counts"]) == {28}
    assert sorted(t["fiducial_zero_labels"]) == sporadic.antisymmetric_labels()


def test_line_sets():
    vectors = sporadic.line_set("icosahedron")
    assert len(vectors) == 6
    norms = [sum(x * x for x in v) for v in vectors]
    for a in range(6):
        for b in range(a + 1, 6):
            dot = sum(x * y for x, y in zip(vectors[a], vectors[b]))
            assert dot * dot / (norms[a] * norms[b]) == pytest.approx(0.2)


def test_report_all_is_deterministic():
    a = sporadic.report_all()
    assert a == sporadic.report_all()
    doc = json.loads(a)
    assert doc["overall"] is True
    assert len(doc["families"]) == 13
