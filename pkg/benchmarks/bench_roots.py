"""Benchmark the root-refinement kernels: compiled extension vs pure Python.

The simultaneous-iteration sweep is the one hot loop in the package (the
numeric cross-validation runs tens of thousands of root solves); everything
symbolic is arbitrary-precision rational work that a compiled kernel would
not help.  Run:

    python3 benchmarks/bench_roots.py [--samples N] [--degrees LO..HI]
"""

import argparse
import random
import time

from rootmean import _aberth_py
from rootmean.numeric import _initial_guesses, poly_from_roots, sample_roots

try:
    from rootmean import _aberth as compiled
except ImportError:
    compiled = None


def workload(samples, degrees, seed=42):
    rng = random.Random(seed)
    problems = []
    for _ in range(samples):
        deg = rng.choice(degrees)
        coeffs = poly_from_roots(sample_roots(rng, deg))
        problems.append((coeffs, _initial_guesses(coeffs)))
    return problems


def run(kernel, problems):
    t0 = time.perf_counter()
    total_iters = 0
    for coeffs, z0 in problems:
        _, iters, _ = kernel.aberth_refine(coeffs, list(z0), 200, 1e-13)
        total_iters += iters
    return time.perf_counter() - t0, total_iters


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=2000)
    parser.add_argument("--degrees", default="2..10")
    args = parser.parse_args()
    lo, hi = (int(x) for x in args.degrees.split(".."))
    problems = workload(args.samples, range(lo, hi + 1))

    results = {}
    t_py, it_py = run(_aberth_py, problems)
    results["python"] = t_py
    print(f"pure python : {t_py:.3f}s total, {1e6 * t_py / len(problems):8.1f} us/solve, {it_py} iterations")
    if compiled is not None:
        t_c, it_c = run(compiled, problems)
        results["compiled"] = t_c
        print(f"compiled    : {t_c:.3f}s total, {1e6 * t_c / len(problems):8.1f} us/solve, {it_c} iterations")
        print(f"speedup     : {t_py / t_c:.1f}x")
    else:
        print("compiled kernel not built (python3 setup.py build_ext --inplace)")


if __name__ == "__main__":
    main()
