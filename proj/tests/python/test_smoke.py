# Copyright 2026 The qilent Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the Python bindings."""

import os
import pathlib

import numpy as np
import pytest

import qilent

PROGRAMS = pathlib.Path(os.environ.get("QILENT_PROGRAMS_DIR", pathlib.Path(__file__).parents[2] / "programs"))


def source(name):
    return (PROGRAMS / f"{name}.qil").read_text()


def test_ghz_is_one_block():
    a = qilent.analyze(source("ghz"), domain="c")
    assert a["qubits"] == 3
    assert [b["qubits"] for b in a["blocks"]] == [[0, 1, 2]]
    assert "{0,1,2} stabilizer" in qilent.render(a)


def test_exm1_domains_differ():
    c = qilent.analyze(source("exm1"), domain="c", init="zeros")
    e = qilent.analyze(source("exm1"), domain="e", init="zeros")
    assert [b["qubits"] for b in c["blocks"]] == [[0], [1, 2]]
    assert [b["qubits"] for b in e["blocks"]] == [[0], [1], [2]]
    assert qilent.leq_c(e, c) and not qilent.leq_c(c, e)
    assert qilent.join_c(e, c) == c


def test_trace_and_dict_init():
    init = {"qubits": 2, "blocks": [{"qubits": [0, 1], "kind": "stabilizer", "rows": ["XX", "ZZ"]}]}
    out = qilent.analyze("qubits 2; CX(q0,q1)", domain="c", init=init, trace=True)
    assert out["trace"][-1]["point"] == "CX(q0, q1)"
    assert [b["qubits"] for b in out["result"]["blocks"]] == [[0], [1]]


def test_simulate_ghz():
    rho = qilent.simulate(source("ghz"))
    ghz = np.zeros(8)
    ghz[[0, 7]] = 2 ** -0.5
    assert np.allclose(rho, np.outer(ghz, ghz))
    rho = qilent.simulate("qubits 1; H(q0)", state=np.array([0.0, 1.0]))
    assert np.allclose(rho, 0.5 * np.array([[1, -1], [-1, 1]]))


def test_check_reports_no_hard_failures():
    report = qilent.check(cases=50, seed=3, qubits=3)
    assert report["cases"] == 50
    assert report["hard_failures"] == 0
    assert qilent.check(source("exm0"), domain="c", cases=10)["hard_failures"] == 0


def test_errors():
    with pytest.raises(qilent.ParseError, match="1:"):
        qilent.pretty("qubits 2; CX(q0,q0)")
    with pytest.raises(ValueError):
        qilent.analyze("qubits 1; skip", init={"qubits": 1, "blocks": []})
    with pytest.raises(qilent.AnalysisError):
        qilent.analyze("qubits 2; while q0 do H(q1) od", domain="c", init="zeros", max_while_iters=1)


def test_pretty_and_desugar():
    assert qilent.pretty("qubits 1;  H( q0 )") == "qubits 1;\nH(q0)"
    assert qilent.desugar("qubits 1; init") == "qubits 1;\nif q0 then\n  skip\nelse\n  X(q0)\nfi"
