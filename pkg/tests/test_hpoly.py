import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from heisenharm.exactnum import I, DomainError
from heisenharm.hpoly import (
    T_VAR as t,
    Z_VAR as z,
    ZBAR_VAR as zb,
    HPoint,
    HPolynomial,
    apply_L_alpha,
    apply_L_alpha_symmetric,
    apply_sublaplacian_real,
    apply_T,
    apply_X,
    apply_Y,
    apply_Z,
    apply_Zbar,
    commutator,
    dilate,
    dilate_point,
    eval_cartesian,
    exact_rank,
    group_inverse,
    group_multiply,
    heisenberg_degree,
    rotate_quarter,
)

from conftest import hpolys, random_hpoly, sympy_real_sublaplacian, to_sympy_real

ONE_P = HPolynomial.constant(1)


def test_complex_vector_fields_on_generators():
    assert apply_Z(z) == 1
    assert apply_Z(zb).is_zero()
    assert apply_Zbar(t) == -I * z
    assert apply_Z(t) == I * zb
    assert apply_T(t ** 2) == 2 * t
    assert apply_T(ONE_P).is_zero()


def test_real_vector_fields_on_generators():
    assert apply_X(z) == 1 and apply_X(zb) == 1
    assert apply_Y(z) == I and apply_Y(zb) == -I
    assert commutator(apply_Y, apply_X, t) == 4


def test_L_alpha_examples():
    assert apply_L_alpha(t, 0).is_zero()
    assert apply_L_alpha(z * z * zb - 2 * I * z * t, 0).is_zero()
    for alpha in range(-5, 6):
        assert apply_L_alpha(t + I * alpha * z * zb, alpha).is_zero()


def test_real_sublaplacian_examples():
    assert apply_sublaplacian_real(ONE_P).is_zero()
    assert apply_sublaplacian_real(z * zb) == 4


@settings(max_examples=100, deadline=None)
@given(hpolys())
def test_real_sublaplacian_is_twice_symmetrized(p):
    zzb = apply_Z(apply_Zbar(p)) + apply_Zbar(apply_Z(p))
    assert apply_sublaplacian_real(p) == zzb * 2


@settings(max_examples=25, deadline=None)
@given(hpolys(max_weight=5, max_terms=5))
def test_real_sublaplacian_against_sympy(p):
    # independent route: the real-coordinate formula with z = x + iy
    ours = to_sympy_real(apply_sublaplacian_real(p))
    oracle = sympy_real_sublaplacian(to_sympy_real(p))
    assert sp.expand(ours - oracle) == 0


@settings(max_examples=50, deadline=None)
@given(hpolys())
def test_commutation_relations(p):
    assert commutator(apply_Z, apply_Zbar, p) == apply_T(p) * (-2 * I)
    assert commutator(apply_Y, apply_X, p) == apply_T(p) * 4
    assert commutator(apply_X, apply_T, p).is_zero()
    assert commutator(apply_Y, apply_T, p).is_zero()


@settings(max_examples=50, deadline=None)
@given(hpolys(), st.sampled_from([0, 1, -1, 3, -3, Fraction(1, 2)]))
def test_two_forms_of_L_alpha_agree(p, alpha):
    assert apply_L_alpha(p, alpha) == apply_L_alpha_symmetric(p, alpha)


@settings(max_examples=50, deadline=None)
@given(hpolys(), st.sampled_from([0, 1, -3, 5]), st.integers(0, 3))
def test_rotation_commutes_with_L_alpha(p, alpha, q):
    assert rotate_quarter(apply_L_alpha(p, alpha), q) == apply_L_alpha(rotate_quarter(p, q), alpha)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 6), st.sampled_from([2, Fraction(1, 3), Fraction(-5, 2)]))
def test_L_alpha_has_degree_two(m, lam):
    rng = random.Random(m)
    # homogeneous part of a random polynomial
    p = HPolynomial({mono: c for mono, c in random_hpoly(rng).terms.items() if mono[0] + mono[1] + 2 * mono[2] == m})
    for alpha in (0, 1, -3):
        lhs = apply_L_alpha(dilate(p, lam), alpha)
        rhs = dilate(apply_L_alpha(p, alpha), lam) * Fraction(lam) ** 2
        assert lhs == rhs


def test_heisenberg_degree():
    assert heisenberg_degree(z * z * zb - 2 * I * z * t) == 3
    assert heisenberg_degree(z * zb * z * zb - 2 * t ** 2) == 4
    assert heisenberg_degree(z + t) is None
    with pytest.raises(DomainError):
        heisenberg_degree(HPolynomial())


def test_dilate():
    assert dilate(t, 2) == 4 * t
    p = z * z * zb - 2 * I * z * t
    assert dilate(p, 3) == p * 27
    assert dilate(p, 1) == p
    with pytest.raises(DomainError):
        dilate(p, 0)


def test_group_law_examples():
    g = HPoint(1.5 - 0.5j, 0.25)
    assert group_multiply(HPoint(0, 0), g) == g
    e = group_multiply(g, HPoint(-g.z, -g.t))
    assert e.z == 0 and e.t == 0
    prod = group_multiply(HPoint(1, 0), HPoint(1j, 0))
    assert prod.z == 1 + 1j and prod.t == -2


def test_group_law_associative_and_dilation_compatible():
    rng = random.Random(7)
    for _ in range(50):
        a, b, c = (HPoint(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)), rng.uniform(-2, 2)) for _ in range(3))
        left = group_multiply(group_multiply(a, b), c)
        right = group_multiply(a, group_multiply(b, c))
        assert abs(left.z - right.z) < 1e-12 and abs(left.t - right.t) < 1e-12
        inv = group_multiply(a, group_inverse(a))
        assert abs(inv.z) < 1e-12 and abs(inv.t) < 1e-12
        lam = rng.uniform(0.2, 3)
        d1 = dilate_point(group_multiply(a, b), lam)
        d2 = group_multiply(dilate_point(a, lam), dilate_point(b, lam))
        assert abs(d1.z - d2.z) < 1e-12 and abs(d1.t - d2.t) < 1e-12


def test_eval_cartesian_examples():
    assert eval_cartesian(t, HPoint(0.3 + 2j, 1.5)) == 1.5
    assert eval_cartesian(z * zb, HPoint(3 + 4j, 0)) == 25
    assert eval_cartesian(z * z * zb - 2 * I * z * t, HPoint(1, 1)) == 1 - 2j


def test_eval_matches_exact_dilation():
    rng = random.Random(3)
    for _ in range(20):
        p = random_hpoly(rng)
        pt = HPoint(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), rng.uniform(-1, 1))
        lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        a = eval_cartesian(dilate(p, lam), pt)
        b = eval_cartesian(p, dilate_point(pt, float(lam)))
        assert abs(a - b) <= 1e-12 * max(1.0, abs(b))


def test_json_canonical_order_and_round_trip():
    p = t * 3 + z * zb + z ** 2 - I * zb
    data = p.to_json()
    assert [(d["a"], d["b"], d["c"]) for d in data] == [(0, 1, 0), (0, 0, 1), (1, 1, 0), (2, 0, 0)]
    keys = [(d["a"] + d["b"] + 2 * d["c"], d["a"], d["b"], d["c"]) for d in data]
    assert keys == sorted(keys)
    assert HPolynomial.from_json(data) == p


def test_exact_rank():
    assert exact_rank([z, zb, z + zb]) == 2
    assert exact_rank([z * zb, t, z * zb + I * t, HPolynomial()]) == 2
    assert exact_rank([]) == 0
