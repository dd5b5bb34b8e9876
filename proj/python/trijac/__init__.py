"""Exact Jacobi polynomial identities over the rationals.

Rationals go in as ``int``, ``str`` ("p/q") or ``fractions.Fraction`` and come
back as ``Fraction``. Polynomials are coefficient lists, lowest degree first.
"""

import json
from fractions import Fraction

from . import _trijac
from ._trijac import ApparentSingularity, RedrawLimit, SingularParameters

__all__ = [
    "ApparentSingularity",
    "RedrawLimit",
    "SingularParameters",
    "aw_poly",
    "build_L",
    "build_M",
    "gegenbauer",
    "inverse_pair_holds",
    "jacobi",
    "jacobi_at",
    "strip_clock_fields",
    "suite_names",
    "verify",
]


def _q(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (int, str)):
        return str(value)
    raise TypeError(f"expected int, str or Fraction, got {type(value).__name__}")


def _poly(coeffs):
    return [Fraction(c) for c in coeffs]


def _window(rows):
    return [[_poly(entry) for entry in row] for row in rows]


def jacobi(n, alpha, beta):
    """Coefficients of P_n^(alpha, beta)(x)."""
    return _poly(_trijac.jacobi(n, _q(alpha), _q(beta)))


def jacobi_at(n, alpha, beta, x):
    return Fraction(_trijac.jacobi_at(n, _q(alpha), _q(beta), _q(x)))


def gegenbauer(n, lam):
    """Coefficients of C_n^(lam)(x); C_n^(0) vanishes for n > 0."""
    return _poly(_trijac.gegenbauer(n, _q(lam)))


def aw_poly(n, a, q, z):
    """Askey-Wilson polynomial p_n at cos(theta) = (z + 1/z)/2."""
    return Fraction(_trijac.aw_poly(n, [_q(v) for v in a], _q(q), _q(z)))


def build_L(alpha, beta, n0, size):
    """Lower triangular window rows; entry [i][j] is the polynomial at (n0+i, n0+j)."""
    return _window(_trijac.build_L(_q(alpha), _q(beta), n0, size))


def build_M(alpha, beta, n0, size):
    return _window(_trijac.build_M(_q(alpha), _q(beta), n0, size))


def inverse_pair_holds(alpha, beta, n0, size):
    return _trijac.inverse_pair_holds(_q(alpha), _q(beta), n0, size)


def suite_names():
    return list(_trijac.suite_names())


def verify(suite="all", seed=42, **options):
    """Runs a verification suite and returns the parsed JSON report."""
    for key in ("limit_tol", "limit_ratio"):
        if key in options:
            options[key] = str(options[key])
    return json.loads(_trijac.verify_json(suite, seed, **options))


def strip_clock_fields(report_text):
    return _trijac.strip_clock_fields(report_text)
