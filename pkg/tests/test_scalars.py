from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dec, quad_value, unit_power
from orbitforge.scalars import (
    ONE,
    SQRT2,
    UNIT,
    ZERO,
    QuadScalar,
    approximate_real,
    decimal_enclosure,
    parse_rational,
    small_unit,
    sqrt_enclosure,
)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=500)
quads = st.builds(QuadScalar, rationals, rationals)


def value(x):
    return quad_value(x.a, x.b)


def test_arith_examples():
    assert QuadScalar(1, 1) * QuadScalar(1, -1) == QuadScalar(-1, 0)
    assert (SQRT2 - 1) * (SQRT2 + 1) == ONE
    assert QuadScalar(3, 2) / QuadScalar(1, 1) == QuadScalar(1, 1)


def test_sign_examples():
    assert ZERO.sign() == 0
    assert QuadScalar(-7, 5).sign() == 1
    assert QuadScalar(3, -2).sign() == 1
    assert QuadScalar(7, -5).sign() == -1


def test_to_float_examples():
    assert ONE.to_float() == 1.0
    assert abs(SQRT2.to_float() - 1.4142135623730951) < 1e-15
    assert abs(QuadScalar(-7, 5).to_float() - 0.0710678118654752) < 1e-16


def test_small_unit_examples():
    assert small_unit(Fraction(1, 10)) == (3, QuadScalar(-7, 5))
    assert small_unit(Fraction(1)) == (1, QuadScalar(-1, 1))
    assert small_unit(Fraction(3, 100)) == (4, QuadScalar(17, -12))


def test_approximate_real_examples():
    assert approximate_real(0, Fraction(1, 7)) == ZERO
    q = approximate_real(Fraction(1, 2), Fraction(1, 20))
    assert q == QuadScalar(289, -204)
    err = abs(value(q) - dec(Fraction(1, 2)))
    assert 4.3e-4 < err < 4.4e-4
    q = approximate_real(1, Fraction(1, 10))
    assert abs(q - 1) <= Fraction(1, 10)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(quads, quads)
def test_field_ops_match_decimal(x, y):
    assert abs(value(x + y) - (value(x) + value(y))) < dec(Fraction(1, 10**80))
    assert abs(value(x * y) - value(x) * value(y)) < dec(Fraction(1, 10**80)) * (1 + abs(value(x) * value(y)))
    if y:
        assert x / y * y == x


@given(quads)
def test_sign_matches_decimal(x):
    v = value(x)
    expected = 0 if x.is_zero() else (1 if v > 0 else -1)
    assert x.sign() == expected


@given(quads)
def test_floor_and_round_match_decimal(x):
    v = value(x)
    assert x.floor() == int(v.to_integral_value(rounding="ROUND_FLOOR"))
    assert x.round() == int((v + dec(Fraction(1, 2))).to_integral_value(rounding="ROUND_FLOOR"))


@given(quads)
def test_enclosures_contain_value(x):
    lo, hi = x.enclosure(40)
    assert dec(lo) <= value(x) <= dec(hi)
    if x:
        lo, hi = x.enclose(30)
        assert dec(lo) <= value(x) <= dec(hi)
        assert (hi - lo) * 2**30 <= min(abs(lo), abs(hi))


@given(st.fractions(min_value=0, max_value=10**6, max_denominator=10**4), st.integers(0, 80))
def test_sqrt_enclosure(q, bits):
    lo, hi = sqrt_enclosure(q, bits)
    assert lo * lo <= q <= hi * hi
    assert hi - lo <= Fraction(1, 2**bits)


@given(st.fractions(min_value=-10**6, max_value=10**6), st.fractions(min_value=-10**6, max_value=10**6))
def test_decimal_enclosure_is_outward(a, b):
    lo, hi = min(a, b), max(a, b)
    dlo, dhi = decimal_enclosure(lo, hi)
    assert Fraction(dlo) <= lo and hi <= Fraction(dhi)


@settings(max_examples=200)
@given(st.fractions(min_value=Fraction(1, 10**9), max_value=5, max_denominator=10**9))
def test_small_unit_is_minimal(eps):
    k, u = small_unit(eps)
    assert u == UNIT**k
    assert value(u) <= dec(eps)
    assert k == 1 or unit_power(k - 1) > dec(eps)


@settings(max_examples=300)
@given(rationals, st.fractions(min_value=Fraction(1, 10**8), max_value=1, max_denominator=10**8))
def test_approximate_real_within_eps(t, eps):
    q = approximate_real(t, eps)
    assert q.is_integral()
    assert abs(q - t) <= eps
    assert abs(value(q) - dec(t)) <= dec(eps)


def test_parse_and_str_roundtrip():
    for text in ["289 - 204*sqrt2", "sqrt2", "-sqrt2", "3*sqrt2", "1/2 + 3/4*sqrt2", "0", "-5/3"]:
        x = QuadScalar.parse(text)
        assert QuadScalar.parse(str(x)) == x
    assert QuadScalar.parse("1+-2*sqrt2") == QuadScalar(1, -2)
    with pytest.raises(ValueError):
        QuadScalar.parse("sqrt3")


@given(quads)
def test_json_roundtrip(x):
    assert QuadScalar.from_json(x.to_json()) == x


def test_parse_rational_rejects_floats():
    assert parse_rational(" -3/9 ") == Fraction(-1, 3)
    with pytest.raises(ValueError):
        parse_rational("0.5")
