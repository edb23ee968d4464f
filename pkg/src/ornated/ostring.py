"""Ordered strings: the integer tuples that generate ornated graphs.

Entries are stored as an ordinary 0-based tuple. Position ``p`` of the tuple
is index ``p + 1`` in the 1-based convention used throughout the degree
formulas, so Python positions 0, 2, 4, ... are the *odd-indexed* (forward,
clockwise) entries and positions 1, 3, 5, ... are the *even-indexed*
(backward, anticlockwise) entries.
"""
from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

_LITERAL = re.compile(r"^\d+(,\d+)*$")


@dataclass(frozen=True)
class OrderedString:
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(operator.index(a) for a in self.entries)
        if any(a < 0 for a in entries):
            raise ValueError(f"entries must be non-negative, got {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "OrderedString":
        """Parse the literal syntax ``"1,3,5,1,2,8"`` (whitespace ignored).

        The empty literal gives the empty string.
        """
        compact = re.sub(r"\s+", "", text)
        if compact == "":
            return cls(())
        if not _LITERAL.match(compact):
            raise ValueError(f"malformed ordered string literal: {text!r}")
        return cls(tuple(int(x) for x in compact.split(",")))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, p):
        return self.entries[p]

    def __str__(self):
        return ",".join(str(a) for a in self.entries)

    @property
    def forward(self) -> tuple[int, ...]:
        """Odd-indexed entries (1-based), in string order."""
        return self.entries[0::2]

    @property
    def backward(self) -> tuple[int, ...]:
        """Even-indexed entries (1-based), in string order."""
        return self.entries[1::2]

    @property
    def k(self) -> int:
        return max(self.entries, default=0)

    @property
    def total(self) -> int:
        return sum(self.entries)


StringLike = Union[OrderedString, Sequence[int], str]


def as_string(s: StringLike) -> OrderedString:
    if isinstance(s, OrderedString):
        return s
    if isinstance(s, str):
        return OrderedString.parse(s)
    return OrderedString(tuple(s))


def parity_split(s: StringLike) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(F, B)``: the odd-indexed and even-indexed entries.

    Both are returned in string order; treat them as multisets.
    """
    s = as_string(s)
    return s.forward, s.backward


def reduce_zeros(s: StringLike) -> OrderedString:
    s = as_string(s)
    return OrderedString(tuple(a for a in s if a != 0))


def reduced_degree_chain(s: StringLike) -> list[OrderedString]:
    """Successive reduced degree-strings, starting from ``s`` itself.

    Each step deletes every occurrence of the current minimum; the chain ends
    at the constant string of the maximum entry.
    """
    s = as_string(s)
    if len(s) == 0:
        raise ValueError("reduced degree chain needs a non-empty string")
    chain = [s]
    current = s
    while len(set(current)) > 1:
        low = min(current)
        current = OrderedString(tuple(a for a in current if a != low))
        chain.append(current)
    return chain


def identical_string_count(s: StringLike) -> int:
    """Orderings that rebuild the identical arc matrix: ``m! * t!``.

    Counts orderings, not distinct tuples; repeated values are not collapsed.
    """
    s = as_string(s)
    return math.factorial(len(s.backward)) * math.factorial(len(s.forward))


def isomorphic_string_count(s: StringLike) -> int:
    return math.factorial(len(as_string(s)))


def canonical_interleave(forward: Iterable[int], backward: Iterable[int]) -> OrderedString:
    """Canonical representative of a forward/backward multiset pair.

    Both multisets are sorted descending; forward values fill the odd (1-based)
    positions and backward values the even ones. The shorter side is padded
    with zeros so the interleave stays aligned, and trailing zero padding is
    dropped.
    """
    fwd = sorted(forward, reverse=True)
    bwd = sorted(backward, reverse=True)
    width = max(len(fwd), len(bwd))
    fwd += [0] * (width - len(fwd))
    bwd += [0] * (width - len(bwd))
    out = []
    for a, b in zip(fwd, bwd):
        out += [a, b]
    while out and out[-1] == 0:
        out.pop()
    return OrderedString(tuple(out))
