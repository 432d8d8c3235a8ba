"""Flags in R^n and their projective invariants, computed exactly.

A :class:`Flag` is stored as an ordered basis; its ``a``-dimensional subspace
is the span of the first ``a`` basis vectors, and the wedge of those vectors
is the representative of the top exterior power used in every ratio below.
The ratios are independent of that choice because each wedge factor occurs
once upstairs and once downstairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import product
from math import comb
from typing import Sequence

from . import linalg as la
from .linalg import Mat, Vec


class DegenerateFlagsError(ValueError):
    """Raised when a ratio or map needs a transversality that fails."""


@dataclass(frozen=True)
class Flag:
    basis: tuple

    def __post_init__(self):
        basis = tuple(la.vec(v) for v in self.basis)
        n = len(basis)
        if n < 2 or any(len(v) != n for v in basis):
            raise la.DimensionError("a flag in R^n needs n vectors of length n, n >= 2")
        if la.det(la.from_columns(basis)) == 0:
            raise ValueError("flag basis is linearly dependent")
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def sub(self, k: int) -> tuple:
        """Spanning vectors of the ``k``-dimensional subspace."""
        return self.basis[:k]

    def line(self) -> Vec:
        return self.basis[0]

    def moved_by(self, m: Mat) -> "Flag":
        return Flag(tuple(la.matvec(m, v) for v in self.basis))

    def same_as(self, other: "Flag") -> bool:
        """Equality of the underlying nested subspaces."""
        if self.dim != other.dim:
            return False
        for k in range(1, self.dim):
            cols = self.sub(k) + other.sub(k)
            if la.rank(la.from_columns(cols)) != k:
                return False
        return True

    @classmethod
    def ascending(cls, vectors: Sequence[Sequence]) -> "Flag":
        return cls(tuple(vectors))

    @classmethod
    def descending(cls, vectors: Sequence[Sequence]) -> "Flag":
        return cls(tuple(reversed(tuple(vectors))))


def standard_basis(n: int) -> list[Vec]:
    return [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]


def ascending_standard(n: int) -> Flag:
    return Flag.ascending(standard_basis(n))


def descending_standard(n: int) -> Flag:
    return Flag.descending(standard_basis(n))


def wedge_det(vectors: Sequence[Sequence]) -> Fraction:
    """Determinant of the matrix with the given vectors as columns."""
    vectors = list(vectors)
    n = len(vectors)
    if n == 0 or any(len(v) != n for v in vectors):
        raise la.DimensionError("wedge_det needs n vectors of length n")
    return la.det(la.from_columns(vectors))


def _wedge(e: Flag, a: int, f: Flag, b: int, g: Flag, c: int) -> Fraction:
    return wedge_det(e.sub(a) + f.sub(b) + g.sub(c))


def _check_dims(*flags: Flag) -> int:
    n = flags[0].dim
    if any(fl.dim != n for fl in flags):
        raise la.DimensionError("flags of different dimensions")
    return n


@lru_cache(maxsize=4096)
def is_max_span(e: Flag, f: Flag, g: Flag) -> bool:
    n = _check_dims(e, f, g)
    for a in range(n + 1):
        for b in range(n + 1 - a):
            if _wedge(e, a, f, b, g, n - a - b) == 0:
                return False
    return True


@lru_cache(maxsize=4096)
def is_transverse(e: Flag, f: Flag) -> bool:
    n = _check_dims(e, f)
    return all(_wedge(e, a, f, n - a, f, 0) != 0 for a in range(n + 1))


def discrete_triangle(n: int) -> list[tuple[int, int, int]]:
    """Integer triples a, b, c >= 1 with a + b + c = n, lexicographic."""
    return [(a, b, n - a - b) for a in range(1, n - 1) for b in range(1, n - a)]


def _check_triple_index(n: int, a: int, b: int, c: int) -> None:
    if min(a, b, c) < 1 or a + b + c != n:
        raise ValueError("(%d, %d, %d) is not in the discrete triangle of size %d" % (a, b, c, n))


def triple_ratio(e: Flag, f: Flag, g: Flag, a: int, b: int, c: int) -> Fraction:
    n = _check_dims(e, f, g)
    _check_triple_index(n, a, b, c)
    num = (
        _wedge(e, a + 1, f, b, g, c - 1)
        * _wedge(e, a, f, b - 1, g, c + 1)
        * _wedge(e, a - 1, f, b + 1, g, c)
    )
    den = (
        _wedge(e, a - 1, f, b, g, c + 1)
        * _wedge(e, a, f, b + 1, g, c - 1)
        * _wedge(e, a + 1, f, b - 1, g, c)
    )
    if den == 0 or num == 0:
        raise DegenerateFlagsError("flag triple does not have the maximum span property")
    return num / den


def double_ratio(e: Flag, f: Flag, g: Flag, h: Flag, a: int, b: int) -> Fraction:
    n = _check_dims(e, f, g, h)
    if min(a, b) < 1 or a + b != n:
        raise ValueError("(%d, %d) is not in the discrete interval of size %d" % (a, b, n))
    gl, hl = (g.line(),), (h.line(),)
    top_g = wedge_det(e.sub(a) + f.sub(n - a - 1) + gl)
    top_h = wedge_det(e.sub(a) + f.sub(n - a - 1) + hl)
    bot_h = wedge_det(e.sub(a - 1) + f.sub(n - a) + hl)
    bot_g = wedge_det(e.sub(a - 1) + f.sub(n - a) + gl)
    if top_h == 0 or bot_g == 0 or top_g == 0 or bot_h == 0:
        raise DegenerateFlagsError("double ratio needs transverse lines")
    return -(top_g / top_h) * (bot_h / bot_g)


def _meet_line(e: Flag, i: int, f: Flag, j: int) -> Vec:
    """Spanning vector of E^(i) meet F^(j) when i + j = n + 1."""
    cols = e.sub(i) + f.sub(j)
    ker = la.kernel(la.from_columns(cols))
    if len(ker) != 1:
        raise DegenerateFlagsError("flags are not transverse")
    coeffs = ker[0]
    n = e.dim
    return tuple(sum((coeffs[k] * e.basis[k][r] for k in range(i)), Fraction(0)) for r in range(n))


def adapted_basis(e: Flag, f: Flag, g_line: Sequence) -> list[Vec]:
    """Basis with ascending flag ``e``, descending flag ``f`` and sum on ``g_line``.

    Normalized so that the first nonzero coordinate of the first vector is 1.
    """
    n = _check_dims(e, f)
    g_line = la.vec(g_line)
    if len(g_line) != n:
        raise la.DimensionError("line has wrong length")
    if not is_transverse(e, f):
        raise DegenerateFlagsError("flags are not transverse")
    lines = [_meet_line(e, i, f, n - i + 1) for i in range(1, n + 1)]
    coeffs = la.solve(la.from_columns(lines), g_line)
    if any(c == 0 for c in coeffs):
        raise DegenerateFlagsError("line lies in some E^(a) + F^(n-a-1)")
    basis = [tuple(c * x for x in v) for c, v in zip(coeffs, lines)]
    lead = next(x for x in basis[0] if x != 0)
    return [tuple(x / lead for x in v) for v in basis]


def projective_map_between_triples(e: Flag, f: Flag, g_line, e2: Flag, f2: Flag, g2_line) -> Mat:
    """The projective map sending (e2, f2, g2_line) to (e, f, g_line).

    Normalized so that its first nonzero entry (row-major) is 1.
    """
    target = la.from_columns(adapted_basis(e, f, g_line))
    source = la.from_columns(adapted_basis(e2, f2, g2_line))
    return la.projective_normalize(la.matmul(target, la.inverse(source)))


def slithering_elementary(shared: str, e: Flag, f: Flag, other: Flag) -> Mat:
    """Unipotent map between flag pairs sharing one flag.

    ``shared="first"``: the map fixes ``e`` and sends ``other`` to ``f``.
    ``shared="second"``: the map fixes ``f`` and sends ``other`` to ``e``.
    """
    if shared == "second":
        return slithering_elementary("first", f, e, other)
    if shared != "first":
        raise ValueError("shared must be 'first' or 'second'")
    n = _check_dims(e, f, other)
    if not (is_transverse(e, f) and is_transverse(e, other)):
        raise DegenerateFlagsError("slithering needs transverse flag pairs")
    src = [_meet_line(e, i, other, n - i + 1) for i in range(1, n + 1)]
    dst = [_meet_line(e, i, f, n - i + 1) for i in range(1, n + 1)]
    src_m = la.from_columns(src)
    # coefficient of src[i] in dst[i], which fixes the unipotent scaling
    images = []
    for i, d in enumerate(dst):
        mu = la.solve(src_m, d)[i]
        images.append(tuple(x / mu for x in d))
    return la.matmul(la.from_columns(images), la.inverse(src_m))


def rational_normal_curve_flag(t, n: int) -> Flag:
    """Osculating flag at parameter ``t`` (``None`` meaning infinity)."""
    if t is None:
        return descending_standard(n)
    t = la.as_fraction(t)
    # k-th derivative of (1, t, ..., t^(n-1)) divided by k!
    return Flag(tuple(tuple(comb(j, k) * t ** (j - k) if j >= k else Fraction(0) for j in range(n)) for k in range(n)))


def standard_positive_triple(n: int) -> tuple[Flag, Flag, Flag]:
    """Osculating flags of the rational normal curve at 0, infinity and 1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return (rational_normal_curve_flag(0, n), rational_normal_curve_flag(None, n), rational_normal_curve_flag(1, n))


def all_triple_ratios(e: Flag, f: Flag, g: Flag) -> dict:
    return {abc: triple_ratio(e, f, g, *abc) for abc in discrete_triangle(e.dim)}


def direct_sum_basis(parts: Sequence[tuple[Flag, int]]) -> Mat:
    """Columns: the spanning vectors of each (flag, dim) summand in order."""
    cols: list = []
    for fl, k in parts:
        cols.extend(fl.sub(k))
    m = la.from_columns(cols)
    if la.det(m) == 0:
        raise DegenerateFlagsError("subspaces are not in direct sum")
    return m


def block_operator(parts: Sequence[tuple[Flag, int, Fraction]]) -> Mat:
    """Linear map acting by a scalar on each summand of a direct sum of R^n."""
    basis = direct_sum_basis([(fl, k) for fl, k, _ in parts])
    scalars = []
    for _, k, s in parts:
        scalars.extend([la.as_fraction(s)] * k)
    return la.matmul(basis, la.matmul(la.diagonal(scalars), la.inverse(basis)))


def index_triples(n: int):
    """All (a, b, c) with a, b, c >= 0 and a + b + c = n."""
    return [(a, b, n - a - b) for a, b in product(range(n + 1), repeat=2) if a + b <= n]


def random_flag(rng, n: int, spread: int = 5) -> Flag:
    """A flag with small random rational basis entries."""
    while True:
        rows = [[Fraction(rng.randint(-spread, spread), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        if la.det(la.from_columns(rows)) != 0:
            return Flag(tuple(tuple(r) for r in rows))


def random_max_span_triple(rng, n: int) -> tuple:
    while True:
        triple = (random_flag(rng, n), random_flag(rng, n), random_flag(rng, n))
        if is_max_span(*triple):
            return triple
