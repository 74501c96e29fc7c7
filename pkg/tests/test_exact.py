import random
from fractions import Fraction
from math import gcd

import pytest

from galilei.exact import (
    PoleAtOriginError,
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    first_negative_coefficient,
    polynomial_gcd,
    series_expand,
)


def q(*coeffs):
    return Polynomial("q", coeffs)


def test_rational_arithmetic_matches_cross_multiplication():
    # independent big-integer check of Fraction arithmetic
    rng = random.Random(20240)
    for _ in range(300):
        a, b = rng.randint(-10**9, 10**9), rng.randint(1, 10**9)
        c, d = rng.randint(-10**9, 10**9), rng.randint(1, 10**9)
        x, y = Fraction(a, b), Fraction(c, d)
        s = x + y
        assert s.numerator * (b * d) == (a * d + c * b) * s.denominator
        p = x * y
        assert p.numerator * (b * d) == (a * c) * p.denominator
        assert x.denominator > 0 and gcd(x.numerator, x.denominator) == 1


def test_polynomial_canonical_form():
    assert q(1, 2, 0, 0).coeffs == (1, 2)
    assert q().degree == -1
    assert q().is_zero
    assert q(0, 0).is_zero
    assert q(3).degree == 0
    assert (q(1, 1) * q(1, -1)) == q(1, 0, -1)


def test_polynomial_divmod_and_gcd():
    a = q(1, 0, -1)  # 1 - q^2
    b = q(1, -1)  # 1 - q
    quot, rem = divmod(a, b)
    assert rem.is_zero and quot == q(1, 1)
    g = polynomial_gcd(q(-1, 0, 0, 0, 1), q(1, 0, -1))  # q^4-1 vs 1-q^2
    assert g == q(-1, 0, 1).monic()
    # gcd of coprime polynomials is 1
    assert polynomial_gcd(q(1, 1), q(1, 0, 1)) == q(1)


def test_polynomial_divmod_property():
    rng = random.Random(31)
    for _ in range(80):
        a = q(*[rng.randint(-5, 5) for _ in range(rng.randint(0, 7))])
        b = q(*[rng.randint(-5, 5) for _ in range(rng.randint(1, 4))])
        if b.is_zero:
            continue
        quot, rem = divmod(a, b)
        assert quot * b + rem == a
        assert rem.degree < b.degree


def test_variable_mismatch_rejected():
    with pytest.raises(ValueError):
        q(1) + Polynomial("x", (1,))


def test_rational_function_canonical_idempotent():
    rng = random.Random(7)
    for _ in range(60):
        num = q(*[rng.randint(-4, 4) for _ in range(rng.randint(1, 5))])
        den = q(*[rng.randint(-4, 4) for _ in range(rng.randint(1, 5))])
        if den.is_zero:
            continue
        rf = RationalFunction(num, den)
        again = RationalFunction(rf.num, rf.den)
        assert rf == again
        assert rf.den.leading_coefficient() == 1 or rf.num.is_zero
        assert polynomial_gcd(rf.num, rf.den).degree <= 0


def test_rational_function_arithmetic():
    a = RationalFunction(q(1), q(1, -1))
    assert (a - a).is_zero
    b = RationalFunction(q(0, 1), q(1, 0, -1))  # q/(1-q^2)
    total = a + b
    # 1/(1-q) + q/(1-q^2) = (1+2q)/(1-q^2)
    assert total == RationalFunction(q(1, 2), q(1, 0, -1))
    with pytest.raises(ZeroDivisionError):
        a / RationalFunction(q())


def test_series_expand_geometric():
    rf = RationalFunction(q(1), q(1, -1))
    assert series_expand(rf, 4).coeffs == (1, 1, 1, 1, 1)


def test_series_expand_period_four():
    rf = RationalFunction(q(1), q(1, 0, 0, 0, -1))
    assert [int(c) for c in series_expand(rf, 9).coeffs] == [1, 0, 0, 0, 1, 0, 0, 0, 1, 0]


def test_series_expand_rejects_pole_at_origin():
    with pytest.raises(PoleAtOriginError):
        series_expand(RationalFunction(q(1), q(0, 1)), 5)


def test_series_multiplicativity():
    rng = random.Random(99)
    for _ in range(40):
        def rand_rf():
            num = q(*[rng.randint(-3, 3) for _ in range(rng.randint(1, 4))])
            den = q(rng.choice([1, 2, -1]), *[rng.randint(-3, 3) for _ in range(rng.randint(0, 3))])
            return RationalFunction(num, den)
        a, b = rand_rf(), rand_rf()
        n = 12
        assert series_expand(a * b, n) == series_expand(a, n) * series_expand(b, n)


def test_series_division_and_truncation_rules():
    a = TruncatedSeries("q", [1, 2, 3, 4, 5])
    b = TruncatedSeries("q", [1, 1, 1])
    # product truncates to the shorter operand
    assert (a * b).truncation == 2
    quotient = a / b
    assert quotient * b == a.truncate(2)
    with pytest.raises(PoleAtOriginError):
        a / TruncatedSeries("q", [0, 1, 1, 1, 1])


def test_first_negative_coefficient():
    assert first_negative_coefficient(TruncatedSeries("q", [1, 1, 1])) is None
    # q^5 (1+q^2) / (1 - q^6 + q^12): sign first turns at degree 23
    rf = RationalFunction(
        q(0, 0, 0, 0, 0, 1, 0, 1),
        q(1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1),
    )
    series = series_expand(rf, 30)
    assert first_negative_coefficient(series) == 23
    assert series.coeffs[23] < 0
    # q^3 (1+q+q^2) / (1 + q - q^3 - q^4 - q^5 + q^7 + q^8): turns at 18
    rf = RationalFunction(q(0, 0, 0, 1, 1, 1), q(1, 1, 0, -1, -1, -1, 0, 1, 1))
    assert first_negative_coefficient(series_expand(rf, 30)) == 18
