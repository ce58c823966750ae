from fractions import Fraction
from math import isqrt

import pytest

from eisenfold.eisenstein import DomainError
from eisenfold.flower import cf_face_count, cf_fold_count
from eisenfold.limits import (
    UndeterminedError,
    approximant,
    convergents,
    eta_limit_numeric,
    eta_of_approximant,
    fib_face_count,
    fib_fold_count,
    golden_zeta,
    parse_zeta,
    ratio_scan,
    sqrt_zeta,
)
from eisenfold.surd import QuadraticSurd


FIB = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987]


@pytest.mark.parametrize("n, f", [(2, 13), (3, 23), (4, 39), (5, 65), (6, 107)])
def test_fib_fold_count_table(n, f):
    assert fib_fold_count(n) == f


@pytest.mark.parametrize("n, F", [(2, 14), (3, 38), (4, 98), (5, 258), (6, 674)])
def test_fib_face_count_table(n, F):
    assert fib_face_count(n) == F


def test_fib_formulas_match_orbit_formulas_through_n_20():
    fib = [1, 1]
    while len(fib) < 24:
        fib.append(fib[-1] + fib[-2])
    for n in range(2, 21):
        a, b = fib[n - 1], fib[n]
        assert fib_fold_count(n) == cf_fold_count(a, b)
        assert fib_face_count(n) == cf_face_count(a, b)


def test_fib_domain():
    with pytest.raises(DomainError):
        fib_fold_count(1)


def test_parse_zeta():
    assert parse_zeta("golden") == golden_zeta()
    assert parse_zeta("sqrt:2") == QuadraticSurd(Fraction(-1), Fraction(1), 2)
    with pytest.raises(DomainError):
        parse_zeta("sqrt:4")
    with pytest.raises(DomainError):
        parse_zeta("tau")


def test_golden_convergents_are_fibonacci():
    for n, r in enumerate(convergents(golden_zeta(), 10), start=1):
        assert (r.numerator, r.denominator) == (FIB[n - 1], FIB[n])


def test_approximant_depth():
    r = approximant(golden_zeta(), 10 ** 12)
    assert r.denominator >= 10 ** 12
    assert 0 < r < 1


def test_eta_of_approximant_guards():
    with pytest.raises(DomainError):
        eta_of_approximant(2, 4)
    with pytest.raises(DomainError):
        eta_of_approximant(3, 2)


def test_eta_limit_golden_is_phi_sixth():
    res = eta_limit_numeric(golden_zeta())
    assert res.surd == QuadraticSurd(Fraction(9), Fraction(4), 5)
    assert res.depths_used == (40, 60)


@pytest.mark.parametrize(
    "n, expected",
    [
        (2, (Fraction(75, 7), Fraction(53, 7), 2)),
        (3, (Fraction(132, 13), Fraction(72, 13), 3)),
        (5, (Fraction(321, 19), Fraction(137, 19), 5)),
        (6, (Fraction(27, 2), Fraction(9, 2), 6)),
        (7, (Fraction(3100, 259), Fraction(856, 259), 7)),
        (8, (Fraction(1569, 98), Fraction(370, 49), 2)),
    ],
)
def test_eta_limit_sqrt_family(n, expected):
    res = eta_limit_numeric(sqrt_zeta(n))
    r, s, d = expected
    assert res.surd == QuadraticSurd(r, s, d)
    assert res.surd.d == res.zeta.d  # limit lies in Q(zeta)


def test_eta_limit_undetermined_when_schedule_too_shallow():
    with pytest.raises(UndeterminedError):
        eta_limit_numeric(sqrt_zeta(7), depth_schedule=((40, 60),))


def test_eta_limit_rejects_rationals():
    with pytest.raises(DomainError):
        eta_limit_numeric(QuadraticSurd(Fraction(1, 2), Fraction(0), 1))


def test_ratio_scan_golden_rows():
    rows = ratio_scan(golden_zeta(), 12)
    by_n = {row.n: row for row in rows}
    assert (by_n[2].p, by_n[2].q, by_n[2].fold, by_n[2].faces) == (1, 2, 13, 14)
    assert (by_n[6].fold, by_n[6].faces) == (107, 674)
    ratios = [by_n[n].fold_ratio for n in range(2, 13)]
    assert all(x > y for x, y in zip(ratios, ratios[1:]))
    assert ratios[-1] < Fraction(5, 100)


def test_ratio_scan_phi6_normalized_column():
    # high-precision phi^-6 = 9 - 4*sqrt(5)
    scale = 10 ** 30
    sqrt5 = Fraction(isqrt(5 * scale * scale), scale)
    phi_minus_6 = 9 - 4 * sqrt5
    rows = {row.n: row for row in ratio_scan(golden_zeta(), 6)}
    normalized = {n: float(rows[n].eta_ratio * phi_minus_6) for n in range(2, 7)}
    assert abs(normalized[2] - 0.672718) < 5e-7
    assert abs(normalized[4] - 0.864923) < 5e-7
    assert abs(normalized[5] - 0.912601) < 5e-7
    assert abs(normalized[6] - 0.946633) < 5e-7
    # the n = 3 entry is forced by f = 23, F = 38 to be 0.775794 (6 dp)
    assert abs(normalized[3] - 0.775794) < 5e-7


def test_fold_count_tracks_phi_power_asymptotics():
    # f_n^2 / ((4/5) phi^(2n+8)) stays within [1/2, 2]
    phi = (1 + 5 ** 0.5) / 2
    for n in range(2, 21):
        f = fib_fold_count(n)
        target = 0.8 * phi ** (2 * n + 8)
        assert 0.5 <= f * f / target <= 2.0


def test_eta_limit_monotone_convergence_evidence():
    for zeta in (golden_zeta(), sqrt_zeta(2), sqrt_zeta(6)):
        limit = eta_limit_numeric(zeta).surd
        errors = []
        for r in convergents(zeta, 16)[-5:]:
            e = eta_of_approximant(r.numerator, r.denominator)
            errors.append(abs(QuadraticSurd(e, Fraction(0), 1) - limit))
        assert all(x > y for x, y in zip(errors, errors[1:]))
