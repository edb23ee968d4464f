"""Algebraic laws of ornated-graph construction, checked as matrix identities."""
from __future__ import annotations

import numpy as np

from .graph import arcless, build, underlying_matrix
from .ostring import OrderedString, StringLike, as_string, reduce_zeros

# The four orderings of (a1, a2, a3, a4) listed for the partial commutative law.
PARTIAL_COMMUTATIVE_ORDERS = ((0, 1, 2, 3), (2, 1, 0, 3), (0, 3, 2, 1), (2, 3, 0, 1))


def _only(s: OrderedString, keep) -> OrderedString:
    return OrderedString(tuple(a if p in keep else 0 for p, a in enumerate(s)))


def associative(n: int, s: StringLike) -> bool:
    """Splitting off any single position leaves the graph unchanged."""
    s = as_string(s)
    whole = build(n, s)
    positions = set(range(len(s)))
    return all(
        build(n, _only(s, {p})) + build(n, _only(s, positions - {p})) == whole
        for p in positions
    )


def summation(n: int, s: StringLike) -> bool:
    s = as_string(s)
    total = arcless(n)
    for p in range(len(s)):
        total = total + build(n, _only(s, {p}))
    return total == build(n, s)


def parity_swaps(s: StringLike) -> list[OrderedString]:
    """Every string reachable from ``s`` by one same-parity transposition."""
    s = as_string(s)
    out = []
    for p in range(len(s)):
        for q in range(p + 2, len(s), 2):
            e = list(s)
            e[p], e[q] = e[q], e[p]
            out.append(OrderedString(tuple(e)))
    return out


def partial_commutative(n: int, s: StringLike) -> bool:
    """Parity-preserving reorderings build the identical arc matrix.

    For length 4 the listed orders are checked; otherwise every same-parity
    transposition, which generates all parity-preserving permutations.
    """
    s = as_string(s)
    whole = build(n, s)
    if len(s) == 4:
        variants = [OrderedString(tuple(s[p] for p in order)) for order in PARTIAL_COMMUTATIVE_ORDERS]
    else:
        variants = parity_swaps(s)
    return all(build(n, v) == whole for v in variants)


def redundancy(n: int, s: StringLike) -> bool:
    s = as_string(s)
    return np.array_equal(
        underlying_matrix(build(n, s)), underlying_matrix(build(n, reduce_zeros(s)))
    )


def underlying_permutation(n: int, s: StringLike) -> bool:
    """Any reordering leaves the underlying matrix unchanged (adjacent swaps suffice)."""
    s = as_string(s)
    base = underlying_matrix(build(n, s))
    for p in range(len(s) - 1):
        e = list(s)
        e[p], e[p + 1] = e[p + 1], e[p]
        if not np.array_equal(underlying_matrix(build(n, e)), base):
            return False
    return True


LAWS = {
    "associative": associative,
    "summation": summation,
    "partial_commutative": partial_commutative,
    "redundancy": redundancy,
    "underlying_permutation": underlying_permutation,
}


def check_laws(n: int, s: StringLike) -> dict[str, bool]:
    return {name: law(n, s) for name, law in LAWS.items()}
