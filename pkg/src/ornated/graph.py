"""Ornated multidigraphs and their degree primitives.

Vertices are numbered v1..vn and every vertex argument in this module is
1-based. A forward entry ``a`` puts one arc v_i -> v_j for each
``i < j <= i + a``; a backward entry puts one arc v_i -> v_j for each
``i - a <= j < i``. Reach clips at v1 and vn; there is no wraparound.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .ostring import OrderedString, StringLike, as_string


@dataclass(frozen=True, eq=False)
class OrnatedGraph:
    """An ``n``-vertex multidigraph stored as an arc-multiplicity matrix.

    ``arcs[i-1, j-1]`` is the number of arcs v_i -> v_j. ``provenance`` holds
    the strings the graph was built from (empty for loaded matrices).
    Equality compares ``n`` and the matrix only.
    """

    n: int
    arcs: np.ndarray
    provenance: tuple[OrderedString, ...] = field(default=())

    def __post_init__(self):
        arcs = np.array(self.arcs, dtype=np.int64)
        if self.n < 1:
            raise ValueError("an ornated graph needs at least one vertex")
        if arcs.shape != (self.n, self.n):
            raise ValueError(f"arc matrix must be {self.n}x{self.n}, got {arcs.shape}")
        if (arcs < 0).any():
            raise ValueError("arc multiplicities must be non-negative")
        if np.diagonal(arcs).any():
            raise ValueError("ornated graphs have no loops")
        arcs.flags.writeable = False
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "provenance", tuple(as_string(s) for s in self.provenance))

    def __eq__(self, other):
        if not isinstance(other, OrnatedGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.arcs, other.arcs)

    __hash__ = None

    def __add__(self, other):
        return graph_sum(self, other)

    @property
    def out_degrees(self) -> np.ndarray:
        return self.arcs.sum(axis=1)

    @property
    def in_degrees(self) -> np.ndarray:
        return self.arcs.sum(axis=0)

    @property
    def total_degrees(self) -> np.ndarray:
        return self.out_degrees + self.in_degrees

    def arc_list(self) -> list[tuple[int, int]]:
        """Every arc as a 1-based ``(tail, head)`` pair, repeated by multiplicity."""
        out = []
        for i, j in zip(*np.nonzero(self.arcs)):
            out += [(int(i) + 1, int(j) + 1)] * int(self.arcs[i, j])
        return out


def _offsets(n: int) -> np.ndarray:
    idx = np.arange(n)
    return idx[None, :] - idx[:, None]


def _entry_matrix(offset: np.ndarray, a: int, forward: bool) -> np.ndarray:
    if forward:
        return ((offset >= 1) & (offset <= a)).astype(np.int64)
    return ((offset <= -1) & (offset >= -a)).astype(np.int64)


def arcless(n: int) -> OrnatedGraph:
    return OrnatedGraph(n, np.zeros((n, n), dtype=np.int64))


def build(n: int, s: StringLike) -> OrnatedGraph:
    """Construct the ornated graph of ``s`` on ``n`` vertices."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    s = as_string(s)
    offset = _offsets(n)
    arcs = np.zeros((n, n), dtype=np.int64)
    for p, a in enumerate(s):
        if a:
            arcs += _entry_matrix(offset, a, forward=(p % 2 == 0))
    return OrnatedGraph(n, arcs, (s,))


def graph_sum(g1: OrnatedGraph, g2: OrnatedGraph) -> OrnatedGraph:
    if g1.n != g2.n:
        raise ValueError(f"cannot add graphs on {g1.n} and {g2.n} vertices")
    return OrnatedGraph(g1.n, g1.arcs + g2.arcs, g1.provenance + g2.provenance)


def build_generalized(n: int, strings: Iterable[StringLike]) -> OrnatedGraph:
    """Apply several strings consecutively to the same ``n`` vertices."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    g = arcless(n)
    for s in strings:
        g = graph_sum(g, build(n, s))
    return g


def _check_vertex(n: int, i: int, upper: int | None = None):
    upper = n if upper is None else upper
    if not 1 <= i <= upper:
        raise IndexError(f"vertex index {i} outside 1..{upper}")


def degrees(g: OrnatedGraph, i: int) -> tuple[int, int, int]:
    """``(out, in, total)`` degree of v_i, multiplicities counted."""
    _check_vertex(g.n, i)
    out = int(g.arcs[i - 1, :].sum())
    inn = int(g.arcs[:, i - 1].sum())
    return out, inn, out + inn


def degree_from_matrix(matrix: Sequence[Sequence[int]] | np.ndarray, i: int) -> int:
    """Row-i sum plus column-i sum of a square arc matrix."""
    m = np.asarray(matrix, dtype=np.int64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    _check_vertex(m.shape[0], i)
    return int(m[i - 1, :].sum() + m[:, i - 1].sum())


def relative_degrees(g: OrnatedGraph, i: int) -> tuple[int, int]:
    """``(d_r_minus, d_r_plus)``: arcs v_{i+1} -> v_i and v_i -> v_{i+1}."""
    _check_vertex(g.n, i, upper=g.n - 1)
    return int(g.arcs[i, i - 1]), int(g.arcs[i - 1, i])


def underlying_matrix(g: OrnatedGraph) -> np.ndarray:
    return g.arcs + g.arcs.T


def arc_count(g: OrnatedGraph) -> int:
    return int(g.arcs.sum())
