"""Pure-Python simultaneous root refinement (Ehrlich-Aberth iteration).

Fallback twin of the compiled kernel in ``_aberth.pyx``; same signature,
same update scheme (in-place sweeps with the implicit-deflation correction),
so either backend can serve ``rootmean.numeric.find_roots``.
"""

from __future__ import annotations

BACKEND = "python"


def eval_poly_pair(coeffs, dcoeffs, z):
    """Horner evaluation of p and p' at z; coeffs descending."""
    p = 0j
    for c in coeffs:
        p = p * z + c
    dp = 0j
    for c in dcoeffs:
        dp = dp * z + c
    return p, dp


def aberth_refine(coeffs, z0, max_iter=120, tol=1e-13):
    """Refine all roots of the monic polynomial simultaneously.

    coeffs: descending complex coefficients, coeffs[0] == 1.
    z0: initial guesses, one per root.
    Returns (roots list, iterations used, converged flag); converged means the
    largest relative correction in the final sweep fell below tol.
    """
    n = len(z0)
    z = list(z0)
    deg = len(coeffs) - 1
    dcoeffs = [coeffs[k] * (deg - k) for k in range(deg)]
    iterations = 0
    for it in range(max_iter):
        iterations = it + 1
        max_corr = 0.0
        for i in range(n):
            zi = z[i]
            p, dp = eval_poly_pair(coeffs, dcoeffs, zi)
            if p == 0:
                continue
            if dp == 0:
                # nudge off the stationary point
                z[i] = zi + (1e-8 + 1e-8j) * (1.0 + abs(zi))
                max_corr = 1.0
                continue
            newton = p / dp
            s = 0j
            for k in range(n):
                if k != i:
                    d = zi - z[k]
                    if d != 0:
                        s += 1.0 / d
            denom = 1.0 - newton * s
            w = newton if denom == 0 else newton / denom
            z[i] = zi - w
            rel = abs(w) / (1.0 + abs(z[i]))
            if rel > max_corr:
                max_corr = rel
        if max_corr < tol:
            return z, iterations, True
    return z, iterations, False
