"""Empirical checks of the Kyle-graph conjecture on symmetric directed graphs.

Conditions (i)-(v) are evaluated literally, index for index, and compared
against the rebuild oracle in :mod:`ornated.ratanang`. Nothing here repairs
a condition that disagrees with the oracle; disagreements are the data.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .graph import build
from .kyle import kyle
from .ostring import OrderedString, canonical_interleave
from .ratanang import NotOrnated, is_kyle, peel_staircase

CONDITIONS = ("cond_i", "cond_ii", "cond_iii", "cond_iv", "cond_v")

DEFAULT_SCAN_BUDGET = 1_000_000
DEFAULT_SEARCH_BUDGET = 2_000_000
MAX_SEARCH_ORDER = 7
MAX_SEARCH_MULT = 3


class ResourceError(RuntimeError):
    """Requested enumeration exceeds the configured budget."""


@dataclass(frozen=True)
class ConjectureReport:
    m: int
    a_l: int | None
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool
    cond_v: bool
    is_symmetric: bool
    symmetric_relabeled: bool
    is_kyle_actual: bool
    agreement: bool

    @property
    def conditions_hold(self) -> bool:
        return all(getattr(self, c) for c in CONDITIONS) and self.is_symmetric

    def to_dict(self) -> dict:
        return asdict(self)


def is_unimodal(seq: Sequence[int]) -> bool:
    """Non-decreasing, then a constant plateau at the maximum, then non-increasing."""
    seq = [int(x) for x in seq]
    if not seq:
        return True
    top = max(seq)
    first = seq.index(top)
    last = len(seq) - 1 - seq[::-1].index(top)
    rising = all(a <= b for a, b in zip(seq[: first + 1], seq[1 : first + 1]))
    falling = all(a >= b for a, b in zip(seq[last:], seq[last + 1 :]))
    return rising and falling and all(x == top for x in seq[first : last + 1])


def _square(matrix) -> np.ndarray:
    m = np.asarray(matrix, dtype=np.int64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def is_symmetric_digraph(matrix) -> bool:
    """Both out- and in-degree sequences, in vertex order, are unimodal."""
    m = _square(matrix)
    return is_unimodal(m.sum(axis=1)) and is_unimodal(m.sum(axis=0))


def dihedral_orders(n: int) -> Iterable[list[int]]:
    base = list(range(n))
    for r in range(max(n, 1)):
        rot = base[r:] + base[:r]
        yield rot
        yield rot[::-1]


def is_symmetric_relabeled(matrix) -> bool:
    """Whether some rotation or reflection of the vertex circle is symmetric."""
    m = _square(matrix)
    return any(is_symmetric_digraph(m[np.ix_(p, p)]) for p in dihedral_orders(m.shape[0]))


def largest_entry_from_staircases(matrix) -> int | None:
    """Largest entry read off row 1 and column 1, or None if they are not staircases."""
    m = _square(matrix)
    try:
        parts = peel_staircase(m[0, 1:]) + peel_staircase(m[1:, 0])
    except NotOrnated:
        return None
    return max(parts, default=0)


def _row1_condition(m: np.ndarray) -> bool:
    # e12 >= ... >= e_{1,h} = 1 and e_{1j} = 0 for h+1 <= j <= m, h = floor(m/2)
    order = m.shape[0]
    h = order // 2
    if h < 1:
        return False
    chain = [int(m[0, j - 1]) for j in range(2, h + 1)]
    if any(a < b for a, b in zip(chain, chain[1:])):
        return False
    if int(m[0, h - 1]) != 1:
        return False
    return all(int(m[0, j - 1]) == 0 for j in range(h + 1, order + 1))


def _col1_condition(m: np.ndarray) -> bool:
    # e21 = ... = e_{h-1,1} = 1 and e_{j1} = 0 for h <= j <= m
    order = m.shape[0]
    h = order // 2
    if any(int(m[j - 1, 0]) != 1 for j in range(2, h)):
        return False
    return all(int(m[j - 1, 0]) == 0 for j in range(max(h, 1), order + 1))


def check_conjecture_conditions(matrix) -> ConjectureReport:
    m = _square(matrix)
    order = m.shape[0]
    a_l = largest_entry_from_staircases(m)
    cond_i = order % 2 == 1 and a_l is not None and a_l >= 1 and order == 2 * a_l + 1
    cond_ii = not np.diagonal(m).any()
    pair_sums = {int(m[i, i + 1] + m[i + 1, i]) for i in range(order - 1)}
    cond_iii = len(pair_sums) <= 1
    cond_iv = _row1_condition(m)
    cond_v = _col1_condition(m)
    symmetric = is_symmetric_digraph(m)
    actual = is_kyle(m)
    predicted = all((cond_i, cond_ii, cond_iii, cond_iv, cond_v, symmetric))
    return ConjectureReport(
        m=order,
        a_l=a_l,
        cond_i=cond_i,
        cond_ii=cond_ii,
        cond_iii=cond_iii,
        cond_iv=cond_iv,
        cond_v=cond_v,
        is_symmetric=symmetric,
        symmetric_relabeled=symmetric or is_symmetric_relabeled(m),
        is_kyle_actual=actual,
        agreement=predicted == actual,
    )


def _pmap(fn: Callable, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, math.ceil(len(items) / (4 * workers)))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def tally(reports: Sequence[ConjectureReport]) -> dict:
    """Per-field counts and an all/some/none verdict over the reports."""
    out = {}
    for name in CONDITIONS + ("is_symmetric", "symmetric_relabeled", "is_kyle_actual", "agreement"):
        holds = sum(1 for r in reports if getattr(r, name))
        if holds == len(reports):
            verdict = "all"
        elif holds == 0:
            verdict = "none"
        else:
            verdict = "some"
        out[name] = {"holds": holds, "fails": len(reports) - holds, "verdict": verdict}
    return out


# -- forward direction: do Kyle graphs satisfy the conditions? ---------------

def necessity_strings(max_k: int, max_l: int) -> list[OrderedString]:
    """Strings with entries in 1..max_k and length 1..max_l, shortest first, lexicographic."""
    return [
        OrderedString(entries)
        for length in range(1, max_l + 1)
        for entries in itertools.product(range(1, max_k + 1), repeat=length)
    ]


def _necessity_row(s: OrderedString) -> tuple[OrderedString, ConjectureReport]:
    return s, check_conjecture_conditions(kyle(s).arcs)


@dataclass(frozen=True)
class NecessityScan:
    max_k: int
    max_l: int
    rows: tuple[tuple[OrderedString, ConjectureReport], ...]

    @property
    def reports(self) -> list[ConjectureReport]:
        return [r for _, r in self.rows]

    def summary(self) -> dict:
        return {
            "mode": "necessity",
            "max_k": self.max_k,
            "max_l": self.max_l,
            "strings": len(self.rows),
            "conditions": tally(self.reports),
        }


def scan_necessity(max_k: int, max_l: int, workers: int = 1,
                   budget: int = DEFAULT_SCAN_BUDGET) -> NecessityScan:
    if max_k < 1 or max_l < 1:
        raise ValueError("max_k and max_l must both be at least 1")
    count = sum(max_k ** length for length in range(1, max_l + 1))
    if count > budget:
        raise ResourceError(f"{count} strings exceed the scan budget of {budget}")
    rows = _pmap(_necessity_row, necessity_strings(max_k, max_l), workers)
    return NecessityScan(max_k, max_l, tuple(rows))


# -- reverse direction: do the conditions pick out exactly the Kyle graphs? --

@dataclass(frozen=True)
class Candidate:
    kind: str  # "kyle_fails_condition" or "conditions_hold_not_kyle"
    matrix: tuple[tuple[int, ...], ...]
    report: ConjectureReport
    string: OrderedString | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "string": None if self.string is None else list(self.string.entries),
            "matrix": [list(row) for row in self.matrix],
            "report": self.report.to_dict(),
        }


def _as_tuple(m: np.ndarray) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in m)


def _multisets(k: int, max_size: int) -> list[tuple[int, ...]]:
    return [
        tuple(sorted(c, reverse=True))
        for size in range(max_size + 1)
        for c in itertools.combinations_with_replacement(range(1, k + 1), size)
    ]


def _kyle_candidate(pair) -> Candidate | None:
    forward, backward = pair
    s = canonical_interleave(forward, backward)
    m = kyle(s).arcs
    report = check_conjecture_conditions(m)
    if report.is_kyle_actual and not report.conditions_hold:
        return Candidate("kyle_fails_condition", _as_tuple(m), report, s)
    return None


def _staircases(length: int, max_mult: int) -> list[tuple[int, ...]]:
    return [
        tuple(sorted(c, reverse=True))
        for c in itertools.combinations_with_replacement(range(max_mult + 1), length)
    ]


def _interior_space(order: int, c: int, max_mult: int):
    """Cells below/right of row and column 1, with adjacent pairs tied to sum ``c``."""
    pairs = [((i, i + 1), (i + 1, i)) for i in range(1, order - 1)]
    tied = {cell for p in pairs for cell in p}
    free = [(i, j) for i in range(1, order) for j in range(1, order)
            if i != j and (i, j) not in tied]
    pair_options = [(x, c - x) for x in range(max_mult + 1) if 0 <= c - x <= max_mult]
    size = (max_mult + 1) ** len(free) * len(pair_options) ** len(pairs)
    return pairs, free, pair_options, size


def search_sufficiency(m: int, max_mult: int, workers: int = 1,
                       budget: int = DEFAULT_SEARCH_BUDGET,
                       max_order: int = MAX_SEARCH_ORDER,
                       max_mult_cap: int = MAX_SEARCH_MULT) -> list[Candidate]:
    """Counterexample candidates for the conjecture among order-``m`` matrices.

    Two kinds are returned, in canonical order:

    * Kyle graphs of order ``m`` (multiplicities up to ``max_mult``) that fail
      some literal condition;
    * matrices passing every literal condition and the symmetry test that the
      rebuild oracle rejects. Row 1 and column 1 are enumerated as staircases
      first, since conditions (i), (iv) and (v) depend on them alone; the
      interior is only enumerated, with adjacent pair sums tied by (iii),
      behind a passing prefix.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be a positive odd integer, got {m}")
    if max_mult < 0:
        raise ValueError("max_mult must be non-negative")
    if m > max_order or max_mult > max_mult_cap:
        raise ResourceError(
            f"search bounds m={m}, max_mult={max_mult} exceed caps "
            f"m<={max_order}, max_mult<={max_mult_cap}"
        )
    k = (m - 1) // 2
    sets = _multisets(k, max_mult)
    pairs = [(f, b) for f in sets for b in sets if max(f + b, default=0) == k]
    found = [c for c in _pmap(_kyle_candidate, pairs, workers) if c is not None]

    stairs = _staircases(m - 1, max_mult)
    spent = len(stairs) ** 2
    if spent > budget:
        raise ResourceError(f"{spent} row/column prefixes exceed budget {budget}")
    prefixes = []
    for row in stairs:
        for col in stairs:
            head = np.zeros((m, m), dtype=np.int64)
            head[0, 1:] = row
            head[1:, 0] = col
            a_l = largest_entry_from_staircases(head)
            if (a_l is not None and a_l >= 1 and m == 2 * a_l + 1
                    and _row1_condition(head) and _col1_condition(head)):
                prefixes.append(head)

    for head in prefixes:
        c = int(head[0, 1] + head[1, 0])
        pairs_, free, options, size = _interior_space(m, c, max_mult)
        spent += size
        if spent > budget:
            raise ResourceError(f"pruned space of {spent}+ matrices exceeds budget {budget}")
        for values in itertools.product(range(max_mult + 1), repeat=len(free)):
            for choice in itertools.product(options, repeat=len(pairs_)):
                mat = head.copy()
                for cell, v in zip(free, values):
                    mat[cell] = v
                for (a, b), (x, y) in zip(pairs_, choice):
                    mat[a], mat[b] = x, y
                report = check_conjecture_conditions(mat)
                if report.conditions_hold and not report.is_kyle_actual:
                    found.append(Candidate("conditions_hold_not_kyle", _as_tuple(mat), report))

    return sorted(found, key=lambda c: (c.kind, c.matrix))


def verify_candidate(c: Candidate) -> bool:
    """Re-run the rebuild oracle on a candidate's matrix."""
    m = np.array(c.matrix, dtype=np.int64)
    actual = is_kyle(m)
    if c.kind == "kyle_fails_condition":
        return actual and c.string is not None and np.array_equal(build(m.shape[0], c.string).arcs, m)
    return not actual
