"""Killing form on traceless matrices and the closed-form pairing tables.

The form is normalized as K(X, Y) = 2n Tr(XY).  Each ``kf_*`` function gives
the pairing of two flow generators in closed form; the values do not depend
on the flags used to build the generators.
"""
from __future__ import annotations

from fractions import Fraction

from . import linalg as la
from .linalg import Mat


def killing_form(x: Mat, y: Mat) -> Fraction:
    n = len(x)
    if la.shape(x) != (n, n) or la.shape(y) != (n, n):
        raise la.DimensionError("killing_form needs two n x n matrices")
    if la.trace(x) != 0 or la.trace(y) != 0:
        raise ValueError("killing_form is defined on traceless matrices")
    # Tr(XY) without forming the product
    return 2 * n * sum((x[i][j] * y[j][i] for i in range(n) for j in range(n)), Fraction(0))


def _triple(a: int, b: int, c: int, n: int) -> None:
    if min(a, b, c) < 1 or a + b + c != n:
        raise ValueError("(%d, %d, %d) is not in the discrete triangle of size %d" % (a, b, c, n))


def _pair(a: int, b: int, n: int) -> None:
    if min(a, b) < 1 or a + b != n:
        raise ValueError("(%d, %d) is not a valid index pair for n=%d" % (a, b, n))


def kf_RL(a: int, b: int, c: int, a2: int, b2: int, c2: int, n: int) -> int:
    """K(R^{abc}, L^{a2 b2 c2}) for generators on the same flag triple."""
    _triple(a, b, c, n)
    _triple(a2, b2, c2, n)
    if a >= a2 or b <= b2:
        return 2 * a2 * b
    if c >= c2:
        return 2 * a * b2 - 2 * b * c2 + 2 * b2 * c
    return 2 * a * b2 + 2 * a * c2 - 2 * a2 * c


def kf_SG_SF(a: int, b: int, a2: int, b2: int, n: int) -> int:
    """K(S^{ab}_{EG}, S^{a2 b2}_{EF})."""
    _pair(a, b, n)
    _pair(a2, b2, n)
    return 2 * a2 * b if a >= a2 else 2 * a * b2


def kf_SG_L(a: int, b: int, a2: int, b2: int, c2: int, n: int) -> int:
    """K(S^{ab}_{EG}, L^{a2 b2 c2}_{EFG})."""
    _pair(a, b, n)
    _triple(a2, b2, c2, n)
    return -2 * a2 * b if a >= a2 else -2 * a * (b2 + c2)


def kf_SF_L(a: int, b: int, a2: int, b2: int, c2: int, n: int) -> int:
    """K(S^{ab}_{EF}, L^{a2 b2 c2}_{EFG}); the same table as :func:`kf_SG_L`."""
    return kf_SG_L(a, b, a2, b2, c2, n)
