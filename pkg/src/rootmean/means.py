"""Mean values of derived polynomials over derivative-root families.

phi((D, delta, rho)) is the average of the delta-th derived function of a
monic degree-D polynomial over the D - rho roots of its rho-th derived
function.  Positive orders are derivatives, zero is the function itself, and
negative orders are antiderivatives; antiderivatives extend the shared
parameter family with integration-constant symbols of weights D+1, D+2, ...

The computation follows the direct route: write the averaged function in
quasi-binomial form, replace each power x^j by the mean power sum of the
averaging family, and use the fact that a derived function's parameters are
the (truncated or extended) parameters of the original, so everything lands
in one exact polynomial over the original parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import binomial
from .powersums import materialize, power_sum_mean
from .sympoly import (
    QuasiBinomialVector,
    SymPoly,
    integration_const,
    poly_sum,
    root_param,
)

FLAG_OK = "ok"
FLAG_CONSTANT = "constant"  # delta == D: the derived function is the constant D!
FLAG_ZERO = "zero"  # delta > D: the derived function vanishes


@dataclass(frozen=True)
class PhiKey:
    """Identifies one mean value: degree D, value order delta, family order rho."""

    D: int
    delta: int
    rho: int

    def __post_init__(self):
        if self.D < 2:
            raise ValueError(f"degree must be >= 2, got D={self.D}")
        if self.D - self.rho < 1:
            raise ValueError(f"empty root family: D={self.D}, rho={self.rho}")

    @property
    def family_size(self) -> int:
        return self.D - self.rho

    def shifted(self) -> "PhiKey":
        """Derivative-inheritance image (D+1, delta+1, rho+1)."""
        return PhiKey(self.D + 1, self.delta + 1, self.rho + 1)


@dataclass(frozen=True)
class PhiResult:
    key: PhiKey
    poly: SymPoly
    family_size: int
    flag: str = FLAG_OK

    @property
    def sum_positive(self) -> Fraction:
        return self.poly.sum_positive()


@lru_cache(maxsize=None)
def _master_symbols(D: int, length: int) -> tuple:
    """Order-1..length parameter symbols of the shared derived-function chain.

    Slots past D hold the integration constants (index m, weight D+m) that the
    antiderivatives introduce; every derived function in one chain sees the
    same symbols, so constants are shared between value function and family.
    """
    syms = [root_param(i) for i in range(1, min(D, length) + 1)]
    for m in range(1, length - D + 1):
        syms.append(integration_const(m, D + m))
    return tuple(syms)


@lru_cache(maxsize=None)
def phi(key: PhiKey) -> PhiResult:
    """Exact mean of the delta-th derived function over the rho-th root family."""
    D, delta, rho = key.D, key.delta, key.rho
    n = key.family_size

    if delta >= D:
        if delta == D:
            return PhiResult(key, SymPoly.constant(math.factorial(D)), n, FLAG_CONSTANT)
        return PhiResult(key, SymPoly.zero(), n, FLAG_ZERO)

    deg_g = D - delta  # degree of the averaged function
    length = max(deg_g, n)
    syms = _master_symbols(D, length)

    # true derivative/antiderivative scaling of the monic original
    scale = Fraction(math.factorial(D), math.factorial(D - delta))

    # sum_j coeff_j * mean(z^j) with coeff_j = (-1)^(deg_g - j) C(deg_g, j) * (order deg_g - j parameter)
    pieces = []
    for j in range(deg_g + 1):
        i = deg_g - j
        c = binomial(deg_g, j) * (-1) ** i
        pj = materialize(j, n, syms)
        pieces.append(pj.scale(c) if i == 0 else pj.mul_symbol(syms[i - 1], c))
    return PhiResult(key, poly_sum(pieces).scale(scale), n, FLAG_OK)


def phi_table(D: int, delta: int, rho_values) -> list:
    """PhiResults for each rho, ordered as given (tables list rho descending)."""
    return [phi(PhiKey(D, delta, r)) for r in rho_values]


def statistical_moments(R: QuasiBinomialVector):
    """(mean, variance, third central moment) of the family R parametrizes.

    The family size is R.degree; preconditions: >= 1 for the mean, >= 2 for
    the variance, >= 3 for the third central moment.  For a 3-family these are
    r1, 2(r1^2 - r2), and 2 r1^3 - 3 r1 r2 + r3.
    """
    n = R.degree
    if n < 3:
        raise ValueError("third central moment needs a family of size >= 3")
    binding = {root_param(i): R.entry(i) for i in range(1, n + 1)}

    def psm(j):
        return power_sum_mean(j, n).substitute(binding)

    E = psm(1)
    V = psm(2) - E * E
    W = psm(3) - (psm(2) * E).scale(3) + (E * E * E).scale(2)
    return (E, V, W)
