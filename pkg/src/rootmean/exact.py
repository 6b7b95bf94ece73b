"""Exact rational arithmetic and the combinatorial primitives used everywhere else.

All symbolic coefficients in this package are arbitrary-precision rationals.
``fractions.Fraction`` already satisfies the required invariants (lowest terms,
positive denominator, zero stored as 0/1), so it is re-exported as
``ExactRational`` rather than reimplemented.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

ExactRational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n or k < 0 (so Pascal's identity holds at k = 0)."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0:
        return 0
    return math.comb(n, k)


def multinomial(card: int, parts) -> int:
    """card! / prod(parts!) over a family of nonnegative subindices.

    Raises ValueError unless sum(parts) == card.
    """
    parts = list(parts)
    if card < 0 or any(p < 0 for p in parts):
        raise ValueError("multinomial requires nonnegative arguments")
    if sum(parts) != card:
        raise ValueError(f"multinomial precondition failed: sum{tuple(parts)} != {card}")
    out = math.factorial(card)
    for p in parts:
        out //= math.factorial(p)
    return out


@dataclass(frozen=True)
class PartitionVector:
    """An integer partition stored as (part -> multiplicity) pairs.

    ``items`` holds (part, multiplicity) pairs sorted by decreasing part size,
    every multiplicity >= 1.  ``j`` is the weighted sum (the number being
    partitioned) and ``card`` the total number of parts.
    """

    items: tuple  # ((part, mult), ...) with parts strictly decreasing

    @classmethod
    def from_parts(cls, parts: dict) -> "PartitionVector":
        items = tuple(sorted(((i, k) for i, k in parts.items() if k), reverse=True))
        if any(i < 1 or k < 1 for i, k in items):
            raise ValueError(f"invalid partition parts {parts!r}")
        return cls(items)

    @classmethod
    def from_list(cls, parts_list) -> "PartitionVector":
        counts: dict = {}
        for p in parts_list:
            counts[p] = counts.get(p, 0) + 1
        return cls.from_parts(counts)

    @property
    def j(self) -> int:
        return sum(i * k for i, k in self.items)

    @property
    def card(self) -> int:
        return sum(k for _, k in self.items)

    @property
    def max_part(self) -> int:
        return self.items[0][0] if self.items else 0

    def multiplicities(self):
        return [k for _, k in self.items]

    def as_list(self):
        out = []
        for i, k in self.items:
            out.extend([i] * k)
        return out

    def __repr__(self):
        if not self.items:
            return "PartitionVector(())"
        return "Partition[" + "+".join(str(p) for p in self.as_list()) + "]"


def _descending_partitions(j: int, max_part: int):
    # part lists in descending-lex order: [j], [j-1,1], ..., [1]*j
    if j == 0:
        yield []
        return
    for first in range(min(j, max_part), 0, -1):
        for rest in _descending_partitions(j - first, first):
            yield [first] + rest


@lru_cache(maxsize=None)
def partitions(j: int) -> tuple:
    """All integer partitions of j, each exactly once, in canonical order.

    Canonical order: decreasing largest part, then lexicographically
    decreasing part lists ([4] > [3,1] > [2,2] > [2,1,1] > [1,1,1,1]).
    len(partitions(j)) equals the partition function p(j).
    """
    if j < 0:
        raise ValueError("partitions requires j >= 0")
    return tuple(PartitionVector.from_list(p) for p in _descending_partitions(j, j))


def partition_count(j: int) -> int:
    return len(partitions(j))
