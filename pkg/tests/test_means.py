import math
import random
from fractions import Fraction

import pytest

from rootmean.means import FLAG_CONSTANT, FLAG_ZERO, PhiKey, phi, phi_table, statistical_moments
from rootmean.powersums import mean_parameters
from rootmean.sympoly import Monomial, QuasiBinomialVector, SymPoly, root_param


def poly_str(D, delta, rho):
    return str(phi(PhiKey(D, delta, rho)).poly)


def test_worked_quartic_examples():
    assert poly_str(4, 0, 1) == "-9 r1^4 + 18 r1^2 r2 - 4 r1 r3 - 6 r2^2 + 1 r4"
    assert poly_str(4, 0, 2) == "-8 r1^4 + 16 r1^2 r2 - 4 r1 r3 - 5 r2^2 + 1 r4"
    assert poly_str(4, 0, 3) == "-3 r1^4 + 6 r1^2 r2 - 4 r1 r3 + 1 r4"


def test_function_vanishes_on_own_roots():
    for D in range(2, 11):
        assert phi(PhiKey(D, 0, 0)).poly.is_zero()


def test_antiderivative_family_cubic():
    # mean of a cubic over the roots of its antiderivative: twice the third
    # central moment polynomial
    assert poly_str(3, 0, -1) == "4 r1^3 - 6 r1 r2 + 2 r3"


def test_first_derived_mean_over_own_roots():
    assert poly_str(3, 1, 0) == "3 r1^2 - 3 r2"


def test_sextic_top_row():
    assert poly_str(6, 0, 5) == (
        "-5 r1^6 + 15 r1^4 r2 - 20 r1^3 r3 + 15 r1^2 r4 - 6 r1 r5 + 1 r6"
    )


def test_degenerate_value_orders():
    res = phi(PhiKey(4, 4, 1))
    assert res.flag == FLAG_CONSTANT and res.poly == SymPoly.constant(24)
    res = phi(PhiKey(4, 5, 1))
    assert res.flag == FLAG_ZERO and res.poly.is_zero()


def test_key_validation():
    with pytest.raises(ValueError):
        PhiKey(1, 0, 0)
    with pytest.raises(ValueError):
        PhiKey(4, 0, 4)  # empty family
    assert PhiKey(4, 0, 3).family_size == 1


def test_homogeneity_with_constants():
    # every monomial (including constant-bearing ones) has total weight D - delta
    for D, delta, rho in ((5, 0, -2), (3, -2, 1), (4, -1, -3), (6, 2, -1)):
        res = phi(PhiKey(D, delta, rho))
        assert res.poly.weights() == {D - delta}


def test_constants_absent_for_nonnegative_delta():
    # independence from integration constants, asserted coefficient-exactly-zero
    for D in range(2, 8):
        for delta in range(0, D):
            for m in (1, 2, 3):
                poly = phi(PhiKey(D, delta, -m)).poly
                assert all(s.kind == "r" for s in poly.symbols())


def test_constants_present_for_negative_delta():
    poly = phi(PhiKey(3, -2, 0)).poly
    kinds = {s.kind for s in poly.symbols()}
    assert "c" in kinds


def test_factorial_scaling_identity():
    for D in range(3, 10):
        for delta in range(1, D):
            if D - delta < 2:
                continue
            lhs = phi(PhiKey(D, delta, 0)).poly
            scale = math.factorial(D) // math.factorial(D - delta)
            rhs = phi(PhiKey(D - delta, 0, -delta)).poly.scale(scale)
            assert lhs == rhs


def test_mean_slope_ignores_constant_term():
    # the top parameter (the constant coefficient's symbol) never appears in
    # the mean slope over the function's own roots
    for D in range(2, 10):
        poly = phi(PhiKey(D, 1, 0)).poly
        top = root_param(D)
        assert all(top not in m.symbols() for m, _ in poly.terms())


def test_phi_table_sums():
    rows = phi_table(2, 0, range(1, -9, -1))
    assert [str(r.sum_positive) for r in rows] == ["1", "0", "1", "2", "3", "4", "5", "6", "7", "8"]
    assert phi(PhiKey(4, 0, -6)).sum_positive == 1283
    assert phi(PhiKey(7, 0, -3)).sum_positive == 1913499


def test_memoization_returns_same_object():
    assert phi(PhiKey(5, 0, 2)) is phi(PhiKey(5, 0, 2))


def test_exact_agreement_single_root_family():
    # rho = D-1: the family is the single root of the last derivative, r1
    rng = random.Random(17)
    for D in range(2, 8):
        res = phi(PhiKey(D, 0, D - 1))
        for _ in range(5):
            roots = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(D)]
            params = mean_parameters(roots)
            r1 = params[root_param(1)]
            f_at_r1 = math.prod([r1 - r for r in roots], start=Fraction(1))
            assert res.poly.evaluate(params) == f_at_r1


def test_exact_agreement_two_root_family():
    # rho = D-2: the two roots are x0 +- sqrt(d); the mean over them is the
    # even part sum f^(2m)(x0) d^m / (2m)!, computable exactly
    rng = random.Random(23)
    for D in range(3, 8):
        res = phi(PhiKey(D, 0, D - 2))
        for _ in range(5):
            roots = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(D)]
            params = mean_parameters(roots)
            r1, r2 = params[root_param(1)], params[root_param(2)]
            # monic coefficients of f, ascending
            coeffs = [Fraction(1)]
            for r in roots:
                coeffs = [Fraction(0)] + coeffs
                for i in range(len(coeffs) - 1):
                    coeffs[i] -= r * coeffs[i + 1]
            x0, d = r1, r1 * r1 - r2

            def eval_deriv(order, x):
                total = Fraction(0)
                for k in range(order, D + 1):
                    falling = math.factorial(k) // math.factorial(k - order)
                    total += coeffs[k] * falling * x ** (k - order)
                return total

            expected = sum(
                eval_deriv(2 * m, x0) * d**m / math.factorial(2 * m)
                for m in range(0, D // 2 + 1)
            )
            assert res.poly.evaluate(params) == expected


def test_statistical_moments_cubic():
    R = QuasiBinomialVector.standard(3)
    E, V, W = statistical_moments(R)
    assert str(E) == "1 r1"
    assert str(V) == "2 r1^2 - 2 r2"
    assert str(W) == "2 r1^3 - 3 r1 r2 + 1 r3"
    # population variance of {1, 2, 3} is 2/3
    params = mean_parameters([Fraction(1), Fraction(2), Fraction(3)])
    assert V.evaluate(params) == Fraction(2, 3)
    assert W.evaluate(params) == 0


def test_statistical_moments_requires_three():
    with pytest.raises(ValueError):
        statistical_moments(QuasiBinomialVector.standard(2))


def test_monomial_coefficient_sanity():
    poly = phi(PhiKey(5, 0, -1)).poly
    assert poly.coefficient(Monomial.from_pairs([(root_param(1), 5)])) == 216
