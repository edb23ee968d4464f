"""JSON and DOT serialisation for ornated graphs."""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .graph import OrnatedGraph, build_generalized
from .ostring import OrderedString


def graph_to_dict(g: OrnatedGraph) -> dict:
    out = {"n": g.n, "matrix": g.arcs.tolist()}
    if g.provenance:
        out["strings"] = [list(s.entries) for s in g.provenance]
    return out


def graph_to_json(g: OrnatedGraph) -> str:
    return json.dumps(graph_to_dict(g))


def graph_from_dict(data: dict) -> OrnatedGraph:
    """Load the ``{"n", "matrix", "strings"?}`` format.

    If ``strings`` is present the matrix must equal the sum of their builds.
    """
    try:
        n = data["n"]
        matrix = data["matrix"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"graph JSON needs 'n' and 'matrix': {exc}") from None
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"'n' must be a positive integer, got {n!r}")
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError(f"'matrix' must be {n} rows of {n} integers")
    strings = tuple(OrderedString(tuple(s)) for s in data.get("strings") or ())
    g = OrnatedGraph(n, np.array(matrix, dtype=np.int64), strings)
    if strings and build_generalized(n, strings) != g:
        raise ValueError("matrix does not match the strings it claims to be built from")
    return g


def load_graph(path: str | Path) -> OrnatedGraph:
    with open(path) as fh:
        return graph_from_dict(json.load(fh))


def graph_to_dot(g: OrnatedGraph, collapse: bool = False) -> str:
    """DOT digraph named ``ornated``.

    One edge statement per arc by default, so parallel arcs stay visible;
    ``collapse`` writes one labelled edge per vertex pair instead.
    """
    lines = ["digraph ornated {"]
    lines += [f"  v{i};" for i in range(1, g.n + 1)]
    for i, j in zip(*np.nonzero(g.arcs)):
        mult = int(g.arcs[i, j])
        edge = f"  v{i + 1} -> v{j + 1}"
        if collapse:
            lines.append(f'{edge} [label="{mult}"];')
        else:
            lines += [f"{edge};"] * mult
    lines.append("}")
    return "\n".join(lines) + "\n"
