from fractions import Fraction
from math import factorial, gcd

import pytest
from hypothesis import given, strategies as st

from heisenharm.exactnum import (
    I,
    ONE,
    DomainError,
    GaussianRational,
    gaussian_from_json,
    gaussian_to_json,
    gen_binomial,
    pochhammer,
    rational_to_str,
)

from conftest import gaussians, small_fractions


@pytest.mark.parametrize("a", [Fraction(0), Fraction(7, 3), Fraction(-5, 2)])
def test_pochhammer_empty_product(a):
    assert pochhammer(a, 0) == 1


def test_pochhammer_examples():
    assert pochhammer(1, 3) == 6
    assert pochhammer(-2, 3) == 0
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)


def test_pochhammer_rejects_negative_index():
    with pytest.raises(DomainError):
        pochhammer(1, -1)


def test_gen_binomial_examples():
    assert gen_binomial(Fraction(3, 7), 0) == 1
    assert gen_binomial(-1, 2) == 1
    assert gen_binomial(Fraction(5, 2), 2) == Fraction(15, 8)
    # agrees with the ordinary binomial for natural arguments
    assert all(gen_binomial(9, v) == [1, 9, 36, 84, 126, 126, 84, 36, 9, 1][v] for v in range(10))
    assert gen_binomial(3, 5) == 0


@given(small_fractions, st.integers(0, 50))
def test_pochhammer_step(a, n):
    assert pochhammer(a, n + 1) == pochhammer(a, n) * (a + n)


@given(small_fractions, st.integers(0, 30))
def test_binomial_vs_pochhammer(x, v):
    assert gen_binomial(x, v) * factorial(v) == pochhammer(x - v + 1, v)


@given(small_fractions, st.integers(0, 12))
def test_results_in_lowest_terms(a, n):
    for q in (pochhammer(a, n), gen_binomial(a, n)):
        assert q.denominator > 0
        assert gcd(q.numerator, q.denominator) == 1


def test_gaussian_examples():
    assert (1 + I) * (1 - I) == 2
    assert (1 + I) / (1 + I) == 1
    x = GaussianRational(Fraction(2, 3), Fraction(-5, 7))
    assert x.conjugate().conjugate() == x
    assert I ** 2 == -1
    assert I ** -1 == -I
    assert (2 * I) ** 3 == -8 * I


def test_gaussian_division_by_zero():
    with pytest.raises(DomainError):
        ONE / GaussianRational(0)


def test_gaussian_interop_with_fraction():
    assert GaussianRational(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(GaussianRational(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert Fraction(1, 2) * I == GaussianRational(0, Fraction(1, 2))
    assert complex(GaussianRational(1, -2)) == complex(1, -2)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(gaussians)
def test_norm_and_conjugation(x):
    assert x.conjugate().conjugate() == x
    assert x.norm2() >= 0
    assert (x.norm2() == 0) == (not x)
    assert x * x.conjugate() == x.norm2()


@given(gaussians)
def test_json_round_trip(x):
    assert gaussian_from_json(gaussian_to_json(x)) == x


def test_serialization_format():
    assert rational_to_str(Fraction(4, 2)) == "2"
    assert rational_to_str(Fraction(-3, 6)) == "-1/2"
    assert gaussian_to_json(GaussianRational(Fraction(1, 3), -2)) == {"re": "1/3", "im": "-2"}
