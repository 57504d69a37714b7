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

"""Entanglement analysis for QIL programs.

Assignments are plain dicts in the same schema the command line tool reads
and writes: {"qubits": N, "blocks": [{"qubits": [...], "kind": ..., "rows": [...]}]}.
"""

import json as _json

from . import _qilent
from ._qilent import AnalysisError, ParseError, desugar, pretty

__all__ = [
    "AnalysisError",
    "ParseError",
    "analyze",
    "check",
    "desugar",
    "join_c",
    "leq_c",
    "pretty",
    "render",
    "simulate",
]


def _init_arg(init):
    return init if isinstance(init, str) else _json.dumps(init)


def analyze(source, domain="e", init="top", strict_paper=False, trace=False, max_while_iters=1024):
    """Abstract result of a QIL program; init is "top", "zeros" or an assignment dict.

    With trace=True the return value is {"result": ..., "trace": [...]}.
    """
    out = _json.loads(_qilent.analyze(source, domain, _init_arg(init), strict_paper, trace, max_while_iters))
    return out if trace else out["result"]


def render(assignment):
    """Block-diagonal text picture of an assignment."""
    return _qilent.render(_json.dumps(assignment))


def leq_c(a, b):
    """True when a is at least as precise as b in the stabilizer domain."""
    return _qilent.leq_c(_json.dumps(a), _json.dumps(b))


def join_c(a, b):
    return _json.loads(_qilent.join_c(_json.dumps(a), _json.dumps(b)))


def simulate(source, state=None, max_while_iters=256):
    """Output density matrix (numpy array) from |0...0> or the given state vector."""
    return _qilent.simulate(source, state, max_while_iters)


def check(source=None, domain="both", cases=100, seed=1, qubits=3):
    """Soundness report; random programs on `qubits` qubits when source is None."""
    return _json.loads(_qilent.check(source, domain, cases, seed, qubits))
