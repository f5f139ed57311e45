"""Quaternionic analysis on Sp(1,1).

Quaternions are 4-sequences (t, x, y, z); 2x2 quaternion matrices are
4-sequences (a, b, c, d). Exact rationals come back as fractions.Fraction.
"""

import json
from fractions import Fraction

from ._sp11 import (
    ConfigError,
    Error,
    cauchy_kernel,
    cauchy_reproduce_q_kl,
    gamma_n_counts,
    gauss_legendre,
    is_sp11,
    j_factor,
    mobius,
    mu,
    qmul,
    q_kl_is_regular,
    rn,
    sigma,
    suite_names,
    z_matrix,
)
from . import _sp11

__all__ = [
    "ConfigError", "Error", "cauchy_kernel", "cauchy_reproduce_q_kl", "gamma_n_counts", "gauss_legendre",
    "hurwitz_of_norm", "is_sp11", "j_factor", "jn", "killing_matrix", "mobius", "mu", "p_kl", "q_kl",
    "q_kl_is_regular", "qmul", "rn", "sigma", "suite_names", "verify", "z_matrix",
]


def verify(suite, **options):
    """Run a verification suite and return the parsed report."""
    return json.loads(_sp11.verify_json(suite, **options))


def killing_matrix(algebra):
    return [[Fraction(v) for v in row] for row in _sp11.killing_matrix(algebra)]


def jn(n):
    return [[complex(Fraction(re), Fraction(im)) if im != "0" else Fraction(re) for re, im in row]
            for row in _sp11.jn(n)]


def _poly(terms):
    return {tuple(e): tuple(Fraction(c) for c in coeff) for e, coeff in terms}


def p_kl(n, k, l):
    """P^n_{k,l} as {exponent of (t, x, y, z): quaternion coefficient}."""
    return _poly(_sp11.p_kl(n, k, l))


def q_kl(n, k, l):
    return _poly(_sp11.q_kl(n, k, l))


def hurwitz_of_norm(n):
    return [tuple(Fraction(c) for c in q) for q in _sp11.hurwitz_of_norm(n)]
