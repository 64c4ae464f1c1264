import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from heisenharm.exactnum import I, DomainError, pochhammer
from heisenharm.specfun import (
    PoleError,
    UnivariatePoly,
    UnsupportedInputError,
    euler_transform_identity_check,
    gamma_real,
    gegenbauer_eval,
    gegenbauer_from_generating_function,
    gegenbauer_norm,
    hyp2f1_terminating,
    proportionality_constant,
)

x = UnivariatePoly.x()
lambdas = st.fractions(min_value=Fraction(-3, 8), max_value=6, max_denominator=8).filter(lambda v: v != 0)


def test_univariate_basics():
    p = (x + 1) ** 2
    assert p == UnivariatePoly([1, 2, 1])
    assert p.derivative() == 2 * x + 2
    assert p.compose(x - 1) == x ** 2
    assert UnivariatePoly().degree == -1
    assert p(Fraction(1, 2)) == Fraction(9, 4)
    assert (x - I).conjugate() == x + I
    assert proportionality_constant(3 * p, p) == 3
    assert proportionality_constant(x, p) is None


def test_hyp2f1_examples():
    assert hyp2f1_terminating(0, Fraction(3, 7), Fraction(5, 2)) == UnivariatePoly([1])
    # F(-1, b; c; z) = 1 - b z / c
    assert hyp2f1_terminating(-1, 2, 3) == UnivariatePoly([1, Fraction(-2, 3)])
    # F(-2, 1; 1; z) = (1 - z)^2
    assert hyp2f1_terminating(-2, 1, 1) == (1 - x) ** 2


def test_hyp2f1_errors():
    with pytest.raises(UnsupportedInputError):
        hyp2f1_terminating(Fraction(1, 2), 1, 1)
    with pytest.raises(UnsupportedInputError):
        hyp2f1_terminating(1, 1, 1)
    with pytest.raises(PoleError):
        hyp2f1_terminating(-3, 1, -1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10), st.fractions(-6, 6, max_denominator=6), st.fractions(Fraction(1, 6), 9, max_denominator=6))
def test_hyp2f1_matches_pochhammer_terms(k, b, c):
    # oracle: the defining series sum (a)_v (b)_v / ((c)_v v!) z^v
    poly = hyp2f1_terminating(-k, b, c)
    for v in range(k + 1):
        expected = pochhammer(-k, v) * pochhammer(b, v) / (pochhammer(c, v) * math.factorial(v))
        assert poly[v] == expected


def test_euler_identity_examples():
    assert euler_transform_identity_check(0, 2, 3)
    assert euler_transform_identity_check(-1, Fraction(1, 2), Fraction(5, 2))
    assert euler_transform_identity_check(-3, Fraction(1, 2), Fraction(5, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 8), st.fractions(-6, 6, max_denominator=6), st.fractions(Fraction(1, 6), 9, max_denominator=6))
def test_euler_identity_property(k, b, c):
    assert euler_transform_identity_check(-k, b, c)


def _gegenbauer_oracle(lam, k_max):
    # independent route: the three-term recurrence in exact arithmetic
    out = [UnivariatePoly([1]), UnivariatePoly([0, 2 * lam])]
    for j in range(1, k_max):
        nxt = (x * out[j] * (2 * (j + lam)) - out[j - 1] * (j + 2 * lam - 1)) / (j + 1)
        out.append(nxt)
    return out[: k_max + 1]


def test_gegenbauer_examples():
    lam = Fraction(3, 4)
    series = gegenbauer_from_generating_function(lam, 3)
    assert series[0] == UnivariatePoly([1])
    assert series[1] == UnivariatePoly([0, 2 * lam])
    legendre = gegenbauer_from_generating_function(Fraction(1, 2), 2)
    assert legendre[2] == UnivariatePoly([Fraction(-1, 2), 0, Fraction(3, 2)])


@settings(max_examples=30, deadline=None)
@given(lambdas)
def test_gegenbauer_matches_recurrence(lam):
    series = gegenbauer_from_generating_function(lam, 12)
    assert list(series.polys) == _gegenbauer_oracle(lam, 12)


@settings(max_examples=30, deadline=None)
@given(lambdas, st.integers(0, 10))
def test_gegenbauer_parity_and_degree(lam, k):
    p = gegenbauer_from_generating_function(lam, k)[k]
    assert p.degree == k
    assert p.reflect() == p * (-1) ** k
    assert abs(float(p(Fraction(1, 3))) - gegenbauer_eval(lam, k, 1 / 3)) < 1e-10 * max(1, abs(float(p(Fraction(1, 3)))))


def test_gegenbauer_domain():
    for bad in (0, Fraction(-1, 2), -1):
        with pytest.raises(DomainError):
            gegenbauer_from_generating_function(bad, 2)


def test_gegenbauer_norm_examples():
    assert gegenbauer_norm(Fraction(1, 2), 0) == 2
    assert gegenbauer_norm(Fraction(1, 2), 1) == Fraction(2, 3)
    assert gegenbauer_norm(Fraction(3, 2), 0) == Fraction(4, 3)
    # lam = 1: Chebyshev of the second kind, norm pi/2
    assert abs(gegenbauer_norm(1, 3) - math.pi / 2) < 1e-14


def test_gegenbauer_norm_half_integer_vs_float_formula():
    for lam in (Fraction(1, 2), Fraction(3, 2), Fraction(7, 2)):
        for k in range(6):
            exact = gegenbauer_norm(lam, k)
            l = float(lam)
            approx = (math.sqrt(math.pi) * math.gamma(k + 2 * l) / math.gamma(2 * l) * math.gamma(l + 0.5)
                      / ((k + l) * math.factorial(k) * math.gamma(l)))
            assert isinstance(exact, Fraction)
            assert abs(float(exact) - approx) < 1e-12 * approx


def test_gamma_real():
    assert gamma_real(5) == 24
    assert abs(gamma_real(0.5) - math.sqrt(math.pi)) < 1e-15
    assert abs(gamma_real(-0.5) + 2 * math.sqrt(math.pi)) < 1e-14
    for pole in (0, -1, -4):
        with pytest.raises(DomainError):
            gamma_real(pole)


def test_gegenbauer_against_scipy():
    special = pytest.importorskip("scipy.special")
    for lam in (Fraction(1, 4), Fraction(1, 2), Fraction(5, 3)):
        series = gegenbauer_from_generating_function(lam, 8)
        for k in range(9):
            for xv in (-0.9, -0.2, 0.35, 0.8):
                ref = special.eval_gegenbauer(k, float(lam), xv)
                assert abs(float(series[k](Fraction(xv))) - ref) < 1e-12 * max(1, abs(ref))
