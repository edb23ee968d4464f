"""Kyle graphs, extremal degrees, central clusters and degree sequences."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import OrnatedGraph, build, build_generalized
from .ostring import OrderedString, StringLike, as_string, reduce_zeros, reduced_degree_chain


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    string: OrderedString
    totals: tuple[int, ...]
    per_entry: tuple[tuple[int, ...], ...]  # per_entry[i-1][j-1]: degree of v_i from entry a_j alone
    delta_min: int
    delta_max: int
    cluster: tuple[int, ...]

    def total(self, i: int) -> int:
        return self.totals[i - 1]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["v_i"] + [f"a_{j}" for j in range(1, len(self.string) + 1)] + ["d(v_i)"])
        for i, (row, total) in enumerate(zip(self.per_entry, self.totals), start=1):
            writer.writerow([f"v{i}", *row, total])
        return buf.getvalue()


def entry_degree(a: int, n: int, i: int) -> int:
    """Degree of v_i in the graph of the single entry ``a`` on ``n`` vertices.

    The same for forward and backward entries: ``a`` reaches at most ``a``
    vertices on each side of v_i, clipped at v1 and vn.
    """
    return min(a, n - i) + min(a, i - 1)


def degree_sequence(n: int, s: StringLike) -> DegreeProfile:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    s = as_string(s)
    per_entry = tuple(
        tuple(entry_degree(a, n, i) for a in s) for i in range(1, n + 1)
    )
    totals = tuple(sum(row) for row in per_entry)
    top = max(totals)
    return DegreeProfile(
        n=n,
        string=s,
        totals=totals,
        per_entry=per_entry,
        delta_min=min(totals),
        delta_max=top,
        cluster=tuple(i for i, d in enumerate(totals, start=1) if d == top),
    )


def kyle_order(s: StringLike) -> int:
    return 2 * as_string(s).k + 1


def kyle(s: StringLike) -> OrnatedGraph:
    """The Kyle graph of ``s``: its build on ``2k + 1`` vertices, ``k`` the max entry."""
    s = as_string(s)
    return build(kyle_order(s), s)


def max_degree(s: StringLike) -> int:
    return 2 * as_string(s).total


def min_degree(s: StringLike, n: int) -> int:
    """Minimum degree on ``n >= 2k + 1`` vertices, attained at v1 and vn.

    With an all-zero string every vertex ties at 0, so v1 and vn are the
    unique minimisers only when some entry is positive.
    """
    s = as_string(s)
    if n < kyle_order(s):
        raise ValueError(f"n={n} is below the Kyle order {kyle_order(s)} of {s}")
    return s.total


def central_cluster(g: OrnatedGraph, s: StringLike | None = None) -> tuple[int, ...]:
    """Vertices of ``g`` attaining the maximum possible degree ``2 * sum(s)``.

    ``s`` defaults to the graph's single provenance string. For ``n >= 2k + 1``
    the result is the block ``k+1 .. n-k``.
    """
    if s is None:
        if len(g.provenance) != 1:
            raise ValueError("central_cluster needs the defining string of the graph")
        s = g.provenance[0]
    s = as_string(s)
    if g.n < kyle_order(s):
        raise ValueError(f"graph order {g.n} is below the Kyle order {kyle_order(s)}")
    target = max_degree(s)
    return tuple(int(i) + 1 for i, d in enumerate(g.total_degrees) if d == target)


def order_statistics(s: StringLike) -> dict[str, int | None]:
    """Smallest, second smallest and second largest distinct positive entries.

    Zero entries are removed first. Missing statistics are ``None``.
    """
    values = sorted(set(reduce_zeros(s)))
    return {
        "h1": values[0] if values else None,
        "h2": values[1] if len(values) > 1 else None,
        "k": values[-1] if values else None,
        "k1": values[-2] if len(values) > 1 else None,
    }


def kyle_degree_sequence_by_increments(s: StringLike) -> tuple[int, ...]:
    """Kyle-graph degree sequence grown one vertex at a time.

    Starting from ``d(v1) = sum(s)``, stepping from v_i to v_{i+1} adds the
    length of the reduced degree-string whose entries are all ``>= i``. This
    walks the reduced degree chain outwards from the minimum up to the
    central vertex, then mirrors.
    """
    s = reduce_zeros(s)
    if len(s) == 0:
        return (0,)
    chain = reduced_degree_chain(s)
    k = s.k
    half = [s.total]
    link = 0
    for i in range(1, k + 1):
        while min(chain[link]) < i:
            link += 1
        half.append(half[-1] + len(chain[link]))
    return tuple(half + half[-2::-1])


def generalized_kyle(strings: Sequence[StringLike]) -> OrnatedGraph:
    strings = [as_string(s) for s in strings]
    if not strings:
        raise ValueError("generalized_kyle needs at least one string")
    n = 2 * max(s.k for s in strings) + 1
    return build_generalized(n, strings)


def generalized_max_degree(strings: Iterable[StringLike]) -> int:
    return sum(max_degree(s) for s in strings)
