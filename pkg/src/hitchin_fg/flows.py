"""Eruption and shearing maps, their infinitesimal generators, and projections.

Flows are parametrized by the multiplier ``u = e^t`` so that every matrix
stays rational.  Each map acts by a scalar on the summands of a direct sum
decomposition of R^n cut out by the given flags.
"""
from __future__ import annotations

from fractions import Fraction

from . import linalg as la
from .flags import Flag, DegenerateFlagsError, block_operator, is_max_span, is_transverse
from .linalg import Mat


def _check_triple(e: Flag, f: Flag, g: Flag, a: int, b: int, c: int) -> int:
    n = e.dim
    if min(a, b, c) < 1 or a + b + c != n:
        raise ValueError("eruption indices must be positive and sum to n")
    if not is_max_span(e, f, g):
        raise DegenerateFlagsError("eruptions need a maximum-span flag triple")
    return n


def _check_pair(e: Flag, f: Flag, a: int, b: int) -> int:
    n = e.dim
    if min(a, b) < 1 or a + b != n:
        raise ValueError("shear indices must be positive and sum to n")
    if not is_transverse(e, f):
        raise DegenerateFlagsError("shears need a transverse flag pair")
    return n


def _positive(u) -> Fraction:
    u = la.as_fraction(u)
    if u <= 0:
        raise ValueError("multiplier must be positive")
    return u


def eruption_left(e: Flag, f: Flag, g: Flag, a: int, b: int, c: int, u) -> Mat:
    _check_triple(e, f, g, a, b, c)
    u = _positive(u)
    return block_operator([(e, a, 1 / u), (f, b, 1), (g, c, 1)])


def eruption_right(e: Flag, f: Flag, g: Flag, a: int, b: int, c: int, u) -> Mat:
    _check_triple(e, f, g, a, b, c)
    u = _positive(u)
    return block_operator([(e, a, 1), (f, b, u), (g, c, 1)])


def shear(e: Flag, f: Flag, a: int, b: int, u) -> Mat:
    _check_pair(e, f, a, b)
    u = _positive(u)
    return block_operator([(e, a, u), (f, b, 1)])


def gen_eruption_left(e: Flag, f: Flag, g: Flag, a: int, b: int, c: int) -> Mat:
    n = _check_triple(e, f, g, a, b, c)
    return block_operator([(e, a, Fraction(-b - c, n)), (f, b, Fraction(a, n)), (g, c, Fraction(a, n))])


def gen_eruption_right(e: Flag, f: Flag, g: Flag, a: int, b: int, c: int) -> Mat:
    n = _check_triple(e, f, g, a, b, c)
    return block_operator([(e, a, Fraction(-b, n)), (f, b, Fraction(a + c, n)), (g, c, Fraction(-b, n))])


def gen_shear(e: Flag, f: Flag, a: int, b: int) -> Mat:
    n = _check_pair(e, f, a, b)
    return block_operator([(e, a, Fraction(b, n)), (f, b, Fraction(-a, n))])


_ORDERS = {"EFG": (0, 1, 2), "FGE": (1, 2, 0), "GEF": (2, 0, 1)}


def projection(order: str, e: Flag, f: Flag, g: Flag, i: int, j: int, k: int) -> Mat:
    """Identity on the first summand, zero on the other two.

    ``order`` names the flags carrying the dimensions ``i, j, k``; for
    ``"FGE"`` the decomposition is F^(i) + G^(j) + E^(k).  A middle index
    of 0 is allowed.
    """
    if order not in _ORDERS:
        raise ValueError("order must be one of EFG, FGE, GEF")
    flags = (e, f, g)
    picked = [flags[idx] for idx in _ORDERS[order]]
    if min(i, j, k) < 0 or i + j + k != e.dim:
        raise ValueError("projection indices must be nonnegative and sum to n")
    return block_operator([(picked[0], i, 1), (picked[1], j, 0), (picked[2], k, 0)])


def traceless_part(m: Mat) -> Mat:
    n = len(m)
    return la.sub(m, la.scale(la.trace(m) / n, la.identity(n)))
