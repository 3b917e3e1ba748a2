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

"""Certificates that qudit graph states cannot come from bipartite-source networks."""

import json
from typing import Any, Dict, List, Tuple, Union

from . import _core

__all__ = [
    "UNIVERSAL_FIDELITY_CAP",
    "canonical_form",
    "certify",
    "enumerate_table",
    "ghz_bound",
    "run_cli",
    "verify",
]

UNIVERSAL_FIDELITY_CAP: float = _core.UNIVERSAL_FIDELITY_CAP

Graph = Union[str, Dict[str, Any]]


def _graph_text(graph: Graph) -> str:
    return graph if isinstance(graph, str) else json.dumps(graph)


def certify(graph: Graph, orbit_cap: int = 1000000) -> Dict[str, Any]:
    """Certificate for a graph (text, inline or JSON form), or a not_certified record."""
    return json.loads(_core.certify(_graph_text(graph), orbit_cap))


def verify(certificate: Union[str, Dict[str, Any]]) -> Dict[str, Any]:
    """Re-checks a certificate, including the marginal-chain premises."""
    text = certificate if isinstance(certificate, str) else json.dumps(certificate)
    return json.loads(_core.verify(text))


def enumerate_table(n: int, d: int, max_graphs: int = -1) -> Dict[str, Any]:
    """Certifies every connected class on n vertices over Z_d."""
    return json.loads(_core.enumerate_table(n, d, max_graphs if max_graphs >= 0 else 2**64 - 1))


def ghz_bound(d: int) -> Dict[str, Any]:
    return json.loads(_core.ghz_bound(d))


def canonical_form(graph: Graph) -> Dict[str, Any]:
    return json.loads(_core.canonical_form(_graph_text(graph)))


def run_cli(args: List[str]) -> Tuple[int, str, str]:
    """Runs the command-line tool in-process; returns (exit code, stdout, stderr)."""
    return _core.run_cli(list(args))
