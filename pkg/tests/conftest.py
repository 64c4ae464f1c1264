import random
from fractions import Fraction

import sympy as sp
from hypothesis import strategies as st

from heisenharm.exactnum import GaussianRational
from heisenharm.hpoly import HPolynomial

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)


@st.composite
def monomials(draw, max_weight=6):
    c = draw(st.integers(0, max_weight // 2))
    a = draw(st.integers(0, max_weight - 2 * c))
    b = draw(st.integers(0, max_weight - 2 * c - a))
    return (a, b, c)


def hpolys(max_weight=6, max_terms=8):
    return st.dictionaries(monomials(max_weight), gaussians, max_size=max_terms).map(HPolynomial)


def random_hpoly(rng: random.Random, max_weight=6, max_terms=8) -> HPolynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = rng.randint(0, max_weight // 2)
        a = rng.randint(0, max_weight - 2 * c)
        b = rng.randint(0, max_weight - 2 * c - a)
        terms[(a, b, c)] = GaussianRational(
            Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        )
    return HPolynomial(terms)


# -- sympy oracle in real coordinates (x, y, t) -----------------------------------

X_S, Y_S, T_S = sp.symbols("x y t", real=True)


def to_sympy_real(p: HPolynomial):
    z = X_S + sp.I * Y_S
    zb = X_S - sp.I * Y_S
    expr = 0
    for (a, b, c), coeff in p.items():
        co = sp.Rational(coeff.re.numerator, coeff.re.denominator) + sp.I * sp.Rational(
            coeff.im.numerator, coeff.im.denominator
        )
        expr += co * z ** a * zb ** b * T_S ** c
    return sp.expand(expr)


def sympy_real_sublaplacian(expr):
    """X^2 + Y^2 written out in (x, y, t) with X = d_x + 2y d_t, Y = d_y - 2x d_t."""
    x, y, t = X_S, Y_S, T_S
    return sp.expand(
        sp.diff(expr, x, 2) + sp.diff(expr, y, 2)
        + 4 * y * sp.diff(expr, x, t) - 4 * x * sp.diff(expr, y, t)
        + 4 * (x ** 2 + y ** 2) * sp.diff(expr, t, 2)
    )
