import math
from fractions import Fraction

import pytest

from rootmean.mining import (
    BfileComparison,
    FitError,
    MinedSequence,
    RationalPolynomial,
    StructuralFormError,
    StructureSweep,
    chi,
    compare_with_bfile,
    extract_g,
    fit_h,
    fit_polynomial,
    interpolate,
    is_irreducible_int,
    leading_phi_coefficient,
    mine_Q_and_norlund,
    read_bfile,
    t_series,
    top_parameter_coefficient,
)
from rootmean.powersums import power_sum_mean
from rootmean.sympoly import Monomial, root_param


def test_leading_coefficient_examples():
    assert leading_phi_coefficient(4, 1) == -9
    assert leading_phi_coefficient(4, 0) == 0
    assert leading_phi_coefficient(5, -1) == 216


def test_leading_coefficient_closed_form():
    # coefficient of r1^D is exactly -rho * n^(D-2) with n = D - rho
    for D in range(2, 9):
        for n in range(1, 11):
            rho = D - n
            assert leading_phi_coefficient(D, rho) == Fraction(-rho) * n ** (D - 2)


def test_top_parameter_examples():
    # coefficient of the single top-order parameter
    assert top_parameter_coefficient(4, 3) == 1
    assert top_parameter_coefficient(4, 0) == 0
    assert top_parameter_coefficient(4, -1) == -3
    assert top_parameter_coefficient(5, -1) == 4


def test_rational_polynomial_basics():
    p = RationalPolynomial.make([3, -2, 1])  # x^2 - 2x + 3
    assert p.degree == 2 and p.is_monic() and p.is_integer()
    assert p(2) == 3
    q = p.multiply(RationalPolynomial.make([0, 1]))
    assert q.coeffs == (Fraction(0), Fraction(3), Fraction(-2), Fraction(1))
    assert q.divide_exact(RationalPolynomial.make([0, 1])) == p
    with pytest.raises(StructuralFormError):
        p.divide_exact(RationalPolynomial.make([1, 1]))


def test_interpolation_and_holdout():
    pts = [(Fraction(x), Fraction(x**3 - x + 2)) for x in range(8)]
    poly = fit_polynomial(pts, holdout=2)
    assert poly.coeffs == (Fraction(2), Fraction(-1), Fraction(0), Fraction(1))
    bad = pts[:-1] + [(Fraction(7), Fraction(999))]
    with pytest.raises(FitError):
        fit_polynomial(bad, holdout=2)
    with pytest.raises(FitError):
        interpolate([(Fraction(1), Fraction(0)), (Fraction(1), Fraction(1))])


def test_fit_h_leading_extractor_reproduces_printed_values():
    h, deviations = fit_h(4, extractor=leading_phi_coefficient)
    assert not deviations
    assert [h(n) for n in range(1, 7)] == [-3, -8, -9, 0, 25, 72]
    assert h(7) == 147  # held-out row


def test_fit_h_leading_extractor_degree2():
    h, deviations = fit_h(2, extractor=leading_phi_coefficient)
    assert not deviations
    assert h(2) == 0  # vanishes where the family is the function's own roots
    assert h(1) == -1


def test_fit_h_too_few_points():
    with pytest.raises(FitError):
        fit_h(6, n_points=[1, 2, 3])


def test_extract_g_quartic():
    h, _ = fit_h(4)
    gx = extract_g(4, h)
    assert gx.chi == 0 and gx.M == 2
    assert gx.g.is_monic() and gx.g.is_integer()
    assert gx.irreducible is True


def test_chi_parity_and_degrees():
    assert chi(5) == 1 and chi(6) == 0
    h5, _ = fit_h(5)
    h6, _ = fit_h(6)
    assert extract_g(5, h5).M == 2
    assert extract_g(6, h6).M == 4


def test_structure_sweep_roundtrip():
    sweep = StructureSweep.run(12)
    for D, gx in sweep.extractions.items():
        # h reproduces through the structural factorization at every point
        const = Fraction((-1) ** D * D, math.factorial(D))
        for n in range(1, D + 4):
            rho = Fraction(D - n)
            assert sweep.h_polys[D](n) == const * rho * n ** gx.chi * gx.g(n)
        # g coefficients come back from the t_k extraction
        for k in range(2, D + 1):
            e = D - (k + gx.chi)
            if e >= 0:
                assert gx.t_coefficient(k) == gx.g.coefficient(e)
    # monic condition across the sweep
    for D, gx in sweep.extractions.items():
        assert gx.t_coefficient(2) == 1


def test_t_series_values():
    sweep = StructureSweep.run(16)
    t2 = t_series(2, sweep)
    assert t2.coeffs == (Fraction(1),)
    t3 = t_series(3, sweep)
    assert t3(3) == 0  # odd-k vanishing at D = k
    assert [t3(D) for D in (4, 5, 6)] == [-2, -5, -9]


def test_t_series_reproduces_g_coefficients():
    # recompute g independently at each degree and compare (k = 4)
    sweep = StructureSweep.run(14)
    t4 = t_series(4, sweep)
    for D in range(4, 15):
        h, _ = fit_h(D)
        gx = extract_g(D, h)
        assert t4(D) == gx.t_coefficient(4)


def test_odd_k_vanishing_in_data():
    sweep = StructureSweep.run(12)
    for k in (3, 5, 7):
        for D, val in sweep.t_data(k):
            if D <= k:
                assert val == 0


def test_mine_sequences_integrality_and_stability():
    sweep_a = StructureSweep.run(18)
    q_a, lead_a = mine_Q_and_norlund(6, 18, sweep_a)
    sweep_b = StructureSweep.run(20)
    q_b, lead_b = mine_Q_and_norlund(6, 20, sweep_b)
    # values stable once the fit is overdetermined
    assert q_a.values == q_b.values
    assert lead_a.values == lead_b.values
    assert q_a.values[0] == 1  # monic t_2
    assert all(isinstance(v, int) for v in q_a.values + lead_a.values)


def test_irreducibility_checks():
    assert is_irreducible_int(RationalPolynomial.make([1, 0, 1])) is True  # x^2 + 1
    assert is_irreducible_int(RationalPolynomial.make([-1, 0, 1])) is False  # (x-1)(x+1)
    # product of two irreducible quadratics: settled reducible by trial search
    prod = RationalPolynomial.make([1, 1, 1]).multiply(RationalPolynomial.make([2, 0, 1]))
    assert is_irreducible_int(prod) is False
    assert is_irreducible_int(RationalPolynomial.make([7, 1])) is True  # linear


def test_per_monomial_sequence_third_order_pair():
    # coefficient of r1^l r3^2 in the (l+6)-degree expansion over a 3-family:
    # j(j-5)/18 * 3^(j-5)
    r1, r3 = root_param(1), root_param(3)
    for j in range(6, 13):
        ell = j - 6
        mono = Monomial.from_pairs([(r1, ell), (r3, 2)])
        got = power_sum_mean(j, 3).coefficient(mono)
        assert got == Fraction(j * (j - 5), 18) * 3 ** (j - 5)


def test_per_monomial_sequence_second_order_on_four_family():
    # coefficient of r1^l r2 over a 4-family: magnitude 6 j 4^(j-3), sign -1
    r1, r2 = root_param(1), root_param(2)
    for j in range(2, 9):
        ell = j - 2
        mono = Monomial.from_pairs([(r1, ell), (r2, 1)])
        got = power_sum_mean(j, 4).coefficient(mono)
        assert got == -Fraction(6 * j) * Fraction(4) ** (j - 3)


def test_bfile_reader(tmp_path):
    path = tmp_path / "b000.txt"
    path.write_text("# comment\n1 10\n2 20\n\n3 -30\n", encoding="utf-8")
    assert read_bfile(path) == {1: 10, 2: 20, 3: -30}


def test_bfile_comparator_alignment(tmp_path):
    seq = MinedSequence("test", 2, (1, 2, 24, 48), {})
    # b-file indexed from 1 with the same values: offset -1
    path = tmp_path / "b.txt"
    path.write_text("1 1\n2 2\n3 24\n4 48\n", encoding="utf-8")
    cmp_res = compare_with_bfile(seq, read_bfile(path))
    assert cmp_res.aligned and cmp_res.offset == -1 and not cmp_res.absolute_values


def test_bfile_comparator_absolute_mode(tmp_path):
    seq = MinedSequence("test", 2, (1, -1, 3, -1), {})
    path = tmp_path / "b.txt"
    path.write_text("2 1\n3 1\n4 3\n5 1\n", encoding="utf-8")
    cmp_res = compare_with_bfile(seq, read_bfile(path))
    assert cmp_res.aligned and cmp_res.absolute_values


def test_bfile_comparator_reports_mismatches(tmp_path):
    seq = MinedSequence("test", 2, (1, 2, 25), {})
    path = tmp_path / "b.txt"
    path.write_text("2 1\n3 2\n4 24\n", encoding="utf-8")
    cmp_res = compare_with_bfile(seq, read_bfile(path))
    assert not cmp_res.aligned
    assert cmp_res.matched == 2
    assert cmp_res.mismatches


def test_mined_sequence_json():
    seq = MinedSequence("lcd-of-t_k", 2, (1, 2, 24), {"d_sweep": 20})
    blob = seq.to_json()
    assert blob["values"] == ["1", "2", "24"]
    assert blob["provenance"]["d_sweep"] == 20
