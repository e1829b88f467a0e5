from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, settings, strategies as st

from pwmra.exactnum import (
    QuadExt,
    RadicandMismatchError,
    pochhammer,
    quadext,
    parse_scalar,
    scalar_str,
    sqrt_exact,
    squarefree_reduce,
)


def squarefree_oracle(m: int) -> tuple[int, int]:
    # largest square divisor by brute force
    for s in range(isqrt(m), 0, -1):
        if m % (s * s) == 0:
            return s, m // (s * s)
    raise AssertionError


def test_squarefree_examples():
    assert squarefree_reduce(1) == (1, 1)
    assert squarefree_reduce(12) == squarefree_oracle(12) == (2, 3)
    assert squarefree_reduce(45) == squarefree_oracle(45) == (3, 5)


def test_squarefree_all_small():
    for m in range(1, 10_001):
        s, f = squarefree_reduce(m)
        assert s * s * f == m
        p = 2
        while p * p <= f:
            assert f % (p * p) != 0
            p += 1


def test_field_ops_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert quadext(1, 1, 3) * quadext(1, -1, 3) == Fraction(-2)
    assert quadext(0, 2, 3) / quadext(0, 1, 3) == Fraction(2)
    # rationalized denominator oracle: (2 sqrt3)(sqrt3) / (sqrt3 sqrt3) = 6/3
    assert Fraction(6, 3) == Fraction(2)


def test_quadext_canonicalization():
    assert quadext(2, 0, 5) == Fraction(2)
    assert quadext(0, 1, 12) == quadext(0, 2, 3)  # sqrt(12) = 2 sqrt(3)
    assert quadext(0, 1, 4) == Fraction(2)
    x = quadext(1, 2, 18)  # 1 + 6 sqrt(2)
    assert isinstance(x, QuadExt) and x.d == 2 and x.b == 6


def test_radicand_mismatch():
    with pytest.raises(RadicandMismatchError):
        quadext(0, 1, 2) + quadext(0, 1, 3)


def test_quadext_sign_and_order():
    assert quadext(-7, 4, 3) < 0  # 4 sqrt3 = 6.93 < 7
    assert quadext(-6, 4, 3) > 0
    assert abs(quadext(-7, 4, 3)) == quadext(7, -4, 3)
    assert quadext(0, 1, 2) < quadext(0, 1, 2) + 1


def test_sqrt_exact():
    assert sqrt_exact(Fraction(9, 4)) == Fraction(3, 2)
    v = sqrt_exact(Fraction(3, 4))
    assert v * v == Fraction(3, 4)
    assert sqrt_exact(0) == 0


def test_pochhammer_examples():
    for a in (Fraction(3), Fraction(-5, 7), Fraction(0)):
        assert pochhammer(a, 0) == 1
    assert pochhammer(-2, 3) == 0
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)


def test_scalar_strings_round_trip():
    assert scalar_str(Fraction(-3, 7)) == "-3/7"
    assert scalar_str(Fraction(5)) == "5"
    x = quadext(Fraction(1, 2), Fraction(-4, 5), 3)
    assert scalar_str(x) == "1/2 + -4/5*sqrt(3)"
    assert parse_scalar(scalar_str(x)) == x
    assert parse_scalar("-3/7") == Fraction(-3, 7)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@given(rationals, rationals, st.sampled_from([2, 3, 5, 7, 10, 154]))
@settings(max_examples=150, deadline=None)
def test_multiplicative_inverse(a, b, d):
    x = quadext(a, b, d)
    if x == 0:
        return
    assert x * (1 / x if isinstance(x, Fraction) else Fraction(1) / x) == 1


@given(rationals, st.integers(0, 20), st.integers(0, 20))
@settings(max_examples=150, deadline=None)
def test_pochhammer_addition_law(a, j, k):
    assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)
