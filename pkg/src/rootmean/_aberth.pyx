# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled simultaneous root refinement (Ehrlich-Aberth iteration).

Same contract as rootmean._aberth_py.aberth_refine; the sweep runs on C
double complex buffers and releases the GIL.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef int _sweep(double complex *a, double complex *da, double complex *z,
                int m, int n, int max_iter, double tol) nogil:
    # in-place Gauss-Seidel style sweeps; returns iterations used,
    # negated when the correction tolerance was not reached
    cdef int it, i, k, c
    cdef double complex zi, p, dp, newton, s, denom, w
    cdef double max_corr, rel
    for it in range(max_iter):
        max_corr = 0.0
        for i in range(n):
            zi = z[i]
            p = 0
            for c in range(m):
                p = p * zi + a[c]
            if p == 0:
                continue
            dp = 0
            for c in range(m - 1):
                dp = dp * zi + da[c]
            if dp == 0:
                z[i] = zi + (1e-8 + 1e-8j) * (1.0 + abs(zi))
                max_corr = 1.0
                continue
            newton = p / dp
            s = 0
            for k in range(n):
                if k != i and zi != z[k]:
                    s = s + 1.0 / (zi - z[k])
            denom = 1.0 - newton * s
            if denom == 0:
                w = newton
            else:
                w = newton / denom
            z[i] = zi - w
            rel = abs(w) / (1.0 + abs(z[i]))
            if rel > max_corr:
                max_corr = rel
        if max_corr < tol:
            return it + 1
    return -max_iter


def aberth_refine(coeffs, z0, int max_iter=120, double tol=1e-13):
    """Refine all roots of the monic polynomial simultaneously.

    coeffs: descending complex coefficients, coeffs[0] == 1.
    z0: initial guesses, one per root.
    Returns (roots list, iterations used, converged flag).
    """
    cdef int m = len(coeffs)
    cdef int n = len(z0)
    cdef int i, rc
    cdef double complex *a = <double complex *> malloc(m * sizeof(double complex))
    cdef double complex *da = <double complex *> malloc((m - 1) * sizeof(double complex))
    cdef double complex *z = <double complex *> malloc(n * sizeof(double complex))
    if a == NULL or da == NULL or z == NULL:
        free(a); free(da); free(z)
        raise MemoryError
    try:
        for i in range(m):
            a[i] = coeffs[i]
        for i in range(m - 1):
            da[i] = coeffs[i] * (m - 1 - i)
        for i in range(n):
            z[i] = z0[i]
        with nogil:
            rc = _sweep(a, da, z, m, n, max_iter, tol)
        roots = [z[i] for i in range(n)]
        if rc > 0:
            return roots, rc, True
        return roots, -rc, False
    finally:
        free(a)
        free(da)
        free(z)
