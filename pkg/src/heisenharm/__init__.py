"""Exact solid spherical harmonics for the sublaplacian on the Heisenberg group H1."""
from .exactnum import DomainError, GaussianRational, I, gen_binomial, pochhammer
from .harmonics import (
    HarmonicIndex,
    SphericalPoint,
    basis,
    conjugate_harmonic,
    eval_fundamental_solution,
    eval_spherical,
    h_polynomial,
    solid_harmonic,
)
from .hpoly import HPoint, HPolynomial, apply_L_alpha

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "GaussianRational",
    "I",
    "gen_binomial",
    "pochhammer",
    "HarmonicIndex",
    "SphericalPoint",
    "basis",
    "conjugate_harmonic",
    "eval_fundamental_solution",
    "eval_spherical",
    "h_polynomial",
    "solid_harmonic",
    "HPoint",
    "HPolynomial",
    "apply_L_alpha",
]
