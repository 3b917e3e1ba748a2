# Copyright 2026 The netcert Authors
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

import pytest

import netcert

TRIANGLE = "2 3; 0 1 1; 0 2 1; 1 2 1"


def test_qubit_triangle_certificate():
    cert = netcert.certify(TRIANGLE)
    assert cert["method"] == "obs1"
    assert cert["fidelity_bound"] == 0.9
    report = netcert.verify(cert)
    assert report["all_passed"]
    assert all(c["holds"] for c in report["marginal_chain"])


def test_json_graph_input_and_cap():
    cert = netcert.certify({"d": 3, "n": 3, "edges": [[0, 1, 1], [0, 2, 2]]})
    assert 0.75 < cert["fidelity_bound"] <= netcert.UNIVERSAL_FIDELITY_CAP


def test_negative_control():
    result = netcert.certify("6 3; 0 1 3; 0 2 2")
    assert result["status"] == "not_certified"
    assert any("0 mod 6" in r for r in result["reasons"])


def test_tampered_certificate_fails():
    cert = netcert.certify("3 3; 0 1 1; 0 2 1; 1 2 1")
    cert["kappa"] = 0
    assert not netcert.verify(json.dumps(cert))["all_passed"]


def test_table_and_bounds():
    table = netcert.enumerate_table(3, 3)
    assert table["all_certified"] and table["classes"] == 7
    assert netcert.enumerate_table(4, 3, max_graphs=3)["complete"] is False
    row = netcert.ghz_bound(3)
    assert round(row["bound_closed_form"], 3) == 0.955
    assert abs(row["bound_prime"] - 0.951) <= 0.002


def test_canonical_form_is_relabeling_invariant():
    a = netcert.canonical_form("3 3; 0 1 1; 1 2 2")
    b = netcert.canonical_form("3 3; 2 1 1; 1 0 2")
    assert a == b


def test_errors_raise():
    with pytest.raises(ValueError):
        netcert.certify("2 3; 0 1")
    with pytest.raises(ValueError):
        netcert.verify("{}")


def test_run_cli():
    code, out, err = netcert.run_cli(["ghz-bound", "--d", "2", "--format", "tsv"])
    assert code == 0 and err == ""
    assert out.splitlines()[1].startswith("2\t0.9\t")
