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


"""Sporadic SICs, their probabilistic duals and the exceptional line systems."""

from ._sporadic import (
    OrbitCollapse,
    SicEnsemble,
    UsageError,
    antiflag_to_pauli,
    antisymmetric_labels,
    build_sic,
    count_zeros,
    ensemble_from_json,
    families,
    fano_lines,
    fibonacci_lucas_dims,
    gerzon_bound,
    is_antisymmetric,
    line_set,
    max_zero_bound,
    mub_states,
    n_eff,
    n_eff_pure,
    octonion_mul,
    reconstruct,
    report_all,
    represent,
    represent_state,
    shannon_entropy,
    twin_incidence,
    verify,
    verify_sic,
    welch_angle,
)

__all__ = [
    "OrbitCollapse",
    "SicEnsemble",
    "UsageError",
    "antiflag_to_pauli",
    "antisymmetric_labels",
    "build_sic",
    "count_zeros",
    "ensemble_from_json",
    "families",
    "fano_lines",
    "fibonacci_lucas_dims",
    "gerzon_bound",
    "is_antisymmetric",
    "line_set",
    "max_zero_bound",
    "mub_states",
    "n_eff",
    "n_eff_pure",
    "octonion_mul",
    "reconstruct",
    "report_all",
    "represent",
    "represent_state",
    "shannon_entropy",
    "twin_incidence",
    "verify",
    "verify_sic",
    "welch_angle",
]
