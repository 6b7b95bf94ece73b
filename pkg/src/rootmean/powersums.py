"""Normalized power-sum expansions over an n-element family (Girard-Waring).

For a multiset Z of n values with elementary symmetric functions e_i and power
sums p_j, the classical Girard-Waring formula expands p_j over the integer
partitions of j.  Normalizing (p_j/n, and e_i divided by C(n,i)) gives the
expansion used throughout this package:

    mean(z^j) = sum over partitions kappa of j of gw_coefficient(kappa, n)
                times the product of order-i parameters raised to kappa's
                multiplicities.

Parts larger than n carry C(n,i) = 0 and are pruned.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import PartitionVector, binomial, multinomial, partitions
from .sympoly import Monomial, SymPoly, root_param


def gw_coefficient(kappa: PartitionVector, n: int) -> Fraction:
    """Normalized Girard-Waring coefficient of the partition kappa for an n-family.

    Equals (j(-1)^j / n) * ((-1)^|kappa| / |kappa|) * multinomial(|kappa|; kappa)
    * prod_i C(n,i)^(k_i), with j = ||kappa||.  Zero exactly when some part
    exceeds n.
    """
    if n < 1:
        raise ValueError("family size must be >= 1")
    if not kappa.items:
        raise ValueError("gw_coefficient needs a nonempty partition")
    j = kappa.j
    card = kappa.card
    prod = 1
    for part, mult in kappa.items:
        b = binomial(n, part)
        if b == 0:
            return Fraction(0)
        prod *= b**mult
    sign = 1 if (j + card) % 2 == 0 else -1
    return Fraction(sign * j * multinomial(card, kappa.multiplicities()) * prod, n * card)


@lru_cache(maxsize=None)
def _expansion(j: int, n: int) -> tuple:
    """Nonzero (kappa, coefficient) pairs of the degree-j mean power sum."""
    out = []
    for kappa in partitions(j):
        if kappa.max_part > n:
            continue
        c = gw_coefficient(kappa, n)
        if c:
            out.append((kappa, c))
    return tuple(out)


def materialize(j: int, n: int, symbols) -> SymPoly:
    """Expand mean(z^j) for an n-family whose order-i parameter is symbols[i-1]."""
    if j == 0:
        return SymPoly.constant(1)
    acc = {}
    for kappa, c in _expansion(j, n):
        # partition items are stored by decreasing part; ascending part order
        # matches the symbol sort order (roots by order, then constants)
        powers = tuple((symbols[part - 1], mult) for part, mult in reversed(kappa.items))
        acc[Monomial(powers)] = c
    return SymPoly(acc)


def power_sum_mean(j: int, n: int) -> SymPoly:
    """mean(z^j) over an n-family, as a polynomial in the order-i root parameters.

    Homogeneous of weight j; terms whose partitions have parts > n are absent.
    """
    if j < 1 or n < 1:
        raise ValueError("power_sum_mean requires j >= 1 and n >= 1")
    return materialize(j, n, [root_param(i) for i in range(1, n + 1)])


def power_sum_table(n: int, max_deg: int) -> list:
    """Rows (j, poly, sum_of_positive_coefficients) for j = 1..max_deg."""
    rows = []
    for j in range(1, max_deg + 1):
        p = power_sum_mean(j, n)
        rows.append((j, p, p.sum_positive()))
    return rows


def elementary_symmetric(values) -> list:
    """e_0..e_n of a concrete multiset, exact if the inputs are Fractions."""
    e = [Fraction(1)]
    for v in values:
        e.append(Fraction(0))
        for k in range(len(e) - 1, 0, -1):
            e[k] = e[k] + v * e[k - 1]
    return e


def power_sums(values, max_j: int) -> list:
    """p_0..p_max_j of a concrete multiset (p_0 = family size)."""
    vals = list(values)
    out = [Fraction(len(vals))]
    for j in range(1, max_j + 1):
        out.append(sum((v**j for v in vals), Fraction(0)))
    return out


def newton_residual(n: int, values) -> Fraction:
    """sum_{i+j=n} (-1)^j p_j e_i on a concrete n-multiset; identically zero.

    Kept as a self-check of the symmetric-function bookkeeping.
    """
    vals = list(values)
    if len(vals) != n or n < 1:
        raise ValueError("newton_residual needs exactly n values, n >= 1")
    e = elementary_symmetric(vals)
    p = power_sums(vals, n)
    total = Fraction(0)
    for j in range(n + 1):
        i = n - j
        total += (-1) ** j * p[j] * e[i]
    return total


def mean_parameters(values) -> dict:
    """Concrete order-i parameter values of a multiset: e_i / C(n, i)."""
    vals = [Fraction(v) for v in values]
    n = len(vals)
    e = elementary_symmetric(vals)
    return {root_param(i): e[i] / binomial(n, i) for i in range(1, n + 1)}
