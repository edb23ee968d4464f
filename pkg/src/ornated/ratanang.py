"""Recover the defining string of an ornated graph from its arc matrix.

Row 1 of an ornated matrix holds only forward arcs: the value in column
``1 + d`` counts the forward entries with reach at least ``d``. The row is
therefore a non-increasing staircase, and the forward multiset is its
conjugate partition. Column 1 gives the backward multiset the same way.
Every recovery is confirmed by rebuilding the graph and comparing matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import build
from .ostring import OrderedString, canonical_interleave


class NotOrnated(ValueError):
    """The matrix is not the arc matrix of an ornated graph of its own order."""


@dataclass(frozen=True)
class RecoveryResult:
    forward: tuple[int, ...]
    backward: tuple[int, ...]
    canonical: OrderedString
    string_length: int
    kyle: bool

    def to_dict(self) -> dict:
        return {
            "forward": list(self.forward),
            "backward": list(self.backward),
            "canonical": list(self.canonical.entries),
            "string_length": self.string_length,
            "kyle": self.kyle,
        }


def _square(matrix) -> np.ndarray:
    m = np.asarray(matrix, dtype=np.int64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def peel_staircase(counts: Sequence[int]) -> tuple[int, ...]:
    """Conjugate partition of a non-increasing staircase.

    ``counts[d-1]`` is the number of parts ``>= d``. Returns the parts in
    descending order. Raises NotOrnated if ``counts`` increases anywhere or
    goes negative.
    """
    counts = [int(c) for c in counts]
    if any(c < 0 for c in counts):
        raise NotOrnated(f"negative staircase value in {counts}")
    if any(b > a for a, b in zip(counts, counts[1:])):
        raise NotOrnated(f"not a non-increasing staircase: {counts}")
    parts = []
    for d, c in enumerate(counts, start=1):
        nxt = counts[d] if d < len(counts) else 0
        parts += [d] * (c - nxt)
    return tuple(sorted(parts, reverse=True))


def string_length_from_matrix(matrix) -> int:
    """``e12 + e21``: the number of positive entries of the defining string."""
    m = _square(matrix)
    if m.shape[0] < 2:
        raise ValueError("string length needs a matrix of order at least 2")
    return int(m[0, 1] + m[1, 0])


def recover(matrix) -> RecoveryResult:
    m = _square(matrix)
    order = m.shape[0]
    if order < 1:
        raise ValueError("empty matrix")
    if (m < 0).any():
        raise NotOrnated("negative arc multiplicity")
    if np.diagonal(m).any():
        raise NotOrnated("ornated graphs have no loops")

    forward = peel_staircase(m[0, 1:])
    backward = peel_staircase(m[1:, 0])
    canonical = canonical_interleave(forward, backward)
    rebuilt = build(order, canonical).arcs
    if not np.array_equal(rebuilt, m):
        diff = np.argwhere(rebuilt != m)[0]
        i, j = int(diff[0]) + 1, int(diff[1]) + 1
        raise NotOrnated(
            f"rebuilding from {canonical} differs at e[{i}][{j}]: "
            f"expected {int(rebuilt[i - 1, j - 1])}, found {int(m[i - 1, j - 1])}"
        )
    top = max(forward + backward, default=0)
    return RecoveryResult(
        forward=forward,
        backward=backward,
        canonical=canonical,
        string_length=len(forward) + len(backward),
        kyle=order == 2 * top + 1,
    )


def is_kyle(matrix) -> bool:
    try:
        return recover(matrix).kyle
    except NotOrnated:
        return False
