"""Generalized splines on edge-labeled graphs over Z, Z/mZ and Z[x].

Graphs, splines and isomorphisms are passed as dicts in the same JSON layout
the command-line tool reads; results come back as dicts or strings.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Union

from . import _core
from ._core import GsplineError, contains, run_cli

Document = Union[dict, str, Path]

__all__ = [
    "GsplineError",
    "build",
    "canonical_graph",
    "contains",
    "error_code",
    "intersection",
    "load",
    "path_ideal",
    "paths",
    "pasting_check",
    "run_cli",
    "transport",
    "udp_brute",
    "verify",
    "verify_iso",
    "witness_check",
]


def load(path: Union[str, Path]) -> dict:
    """Reads a JSON document; a spline's relative graph reference is inlined."""
    path = Path(path)
    doc = json.loads(path.read_text())
    if isinstance(doc.get("graph"), str):
        doc["graph"] = load(path.parent / doc["graph"])
    return doc


def _text(doc: Document) -> str:
    if isinstance(doc, Path):
        doc = load(doc)
    return doc if isinstance(doc, str) else json.dumps(doc)


def error_code(e: GsplineError) -> str:
    return str(e).split(":", 1)[0]


def canonical_graph(graph: Document) -> dict:
    return json.loads(_core.canonical_graph(_text(graph)))


def paths(graph: Document, u: str, w: str) -> list[list[str]]:
    return _core.paths(_text(graph), u, w)


def path_ideal(graph: Document, path: list[str]) -> str:
    return _core.path_ideal(_text(graph), path)


def intersection(graph: Document, u: str, w: str) -> str:
    return _core.intersection(_text(graph), u, w)


def verify(spline: Document, degree_bound: Optional[int] = None) -> str:
    return _core.verify(_text(spline), degree_bound)


def build(graph: Document, u: str, w: str, x: Union[str, int], method: str = "crt",
          cut: Optional[str] = None, degree_bound: Optional[int] = None) -> dict:
    return json.loads(_core.build(_text(graph), u, w, str(x), method, cut, degree_bound))


def pasting_check(graph: Document, cut: str, u: str, w: str,
                  degree_bound: Optional[int] = None) -> dict[str, Any]:
    return _core.pasting_check(_text(graph), cut, u, w, degree_bound)


def udp_brute(graph: Document, budget: int = 10_000_000, jobs: int = 1) -> dict[str, Any]:
    return _core.udp_brute(_text(graph), budget, jobs)


def witness_check(graph: Document, x: Union[str, int], u: str = "u", w: str = "w",
                  cut: Optional[str] = None, degree_bound: Optional[int] = None) -> dict[str, Any]:
    return _core.witness_check(_text(graph), str(x), u, w, cut, degree_bound)


def verify_iso(source: Document, target: Document, iso: Document) -> tuple[str, str]:
    return _core.verify_iso(_text(source), _text(target), _text(iso))


def transport(spline: Document, target: Document, iso: Document) -> dict:
    return json.loads(_core.transport(_text(spline), _text(target), _text(iso)))
