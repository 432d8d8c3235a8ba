"""Exact dense linear algebra over the rationals.

Matrices are tuples of row tuples of :class:`fractions.Fraction` (or ``int``
for the integer matrices of the train-track module).  Everything here is
exact; nothing ever touches a float.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple
Mat = tuple


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted: %r" % (x,))
    return Fraction(x)


def vec(entries: Iterable) -> Vec:
    return tuple(as_fraction(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> Mat:
    out = tuple(vec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionError("ragged matrix")
    return out


def shape(m: Mat) -> tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def identity(n: int) -> Mat:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> Mat:
    return tuple(tuple(Fraction(0) for _ in range(c)) for _ in range(r))


def diagonal(entries: Sequence) -> Mat:
    n = len(entries)
    return tuple(
        tuple(as_fraction(entries[i]) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def from_columns(cols: Sequence[Sequence]) -> Mat:
    if not cols:
        return ()
    n = len(cols[0])
    if any(len(c) != n for c in cols):
        raise DimensionError("columns of unequal length")
    return tuple(tuple(as_fraction(c[i]) for c in cols) for i in range(n))


def columns(m: Mat) -> list[Vec]:
    return [tuple(row[j] for row in m) for j in range(shape(m)[1])]


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def matmul(a: Mat, b: Mat) -> Mat:
    if shape(a)[1] != len(b):
        raise DimensionError("cannot multiply %s by %s" % (shape(a), shape(b)))
    cols = shape(b)[1]
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        # the train-track matrices are sparse, so skip zero entries
        for x, brow in zip(row, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(tuple(acc))
    return tuple(out)


def matvec(m: Mat, v: Sequence) -> Vec:
    if shape(m)[1] != len(v):
        raise DimensionError("cannot apply %s matrix to vector of length %d" % (shape(m), len(v)))
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in m)


def add(a: Mat, b: Mat) -> Mat:
    if shape(a) != shape(b):
        raise DimensionError("shape mismatch")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Mat, b: Mat) -> Mat:
    if shape(a) != shape(b):
        raise DimensionError("shape mismatch")
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c, m: Mat) -> Mat:
    c = as_fraction(c)
    return tuple(tuple(c * x for x in row) for row in m)


def trace(m: Mat) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def det(m: Mat) -> Fraction:
    """Determinant by Gaussian elimination with exact pivots."""
    n, c = shape(m)
    if n != c:
        raise DimensionError("determinant of a non-square matrix")
    a = [list(row) for row in m]
    result = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            result = -result
        pivot = a[k][k]
        result *= pivot
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                ri, rk = a[i], a[k]
                for j in range(k + 1, n):
                    ri[j] -= f * rk[j]
    return result


def rref(m: Mat) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = [[as_fraction(x) for x in row] for row in m]
    rows, cols = len(a), (len(a[0]) if a else 0)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Mat) -> int:
    if not m or not m[0]:
        return 0
    if all(isinstance(x, int) for row in m for x in row):
        return integer_rank(m)
    return len(rref(m)[1])


def integer_rank(m: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in m]
    rows, cols = len(a), (len(a[0]) if a else 0)
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, rows):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, cols):
                # exact by Sylvester's identity
                ai[j] = (piv * ai[j] - f * a[r][j]) // prev
            ai[c] = 0
        prev = piv
        r += 1
    return r


def kernel(m: Mat, ncols: int | None = None) -> list[Vec]:
    """Basis of the right null space, one vector per free column.

    ``ncols`` is needed only for a matrix with zero rows.
    """
    if not m:
        if ncols is None:
            raise DimensionError("zero-row matrix needs an explicit column count")
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    a, pivots = rref(m)
    cols = len(a[0])
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(a, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(m: Mat, b: Sequence) -> Vec:
    """The unique solution of ``m x = b`` for square invertible ``m``."""
    n, c = shape(m)
    if n != c or len(b) != n:
        raise DimensionError("solve needs a square system")
    aug = tuple(tuple(row) + (as_fraction(bi),) for row, bi in zip(m, b))
    a, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrixError("singular system")
    return tuple(row[n] for row in a)


def inverse(m: Mat) -> Mat:
    n, c = shape(m)
    if n != c:
        raise DimensionError("inverse of a non-square matrix")
    aug = tuple(tuple(row) + tuple(Fraction(int(i == j)) for j in range(n)) for i, row in enumerate(m))
    a, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrixError("matrix is not invertible")
    return tuple(tuple(row[n:]) for row in a)


def projective_normalize(m: Mat) -> Mat:
    """Rescale so that the first nonzero entry in row-major order is 1."""
    for row in m:
        for x in row:
            if x != 0:
                return scale(1 / x, m)
    raise SingularMatrixError("zero matrix has no projective class")


def projectively_equal(a: Mat, b: Mat) -> bool:
    return projective_normalize(a) == projective_normalize(b)


def char_poly(m: Mat) -> list[Fraction]:
    """Coefficients of det(x I - m), highest degree first (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [Fraction(1)]
    mk = zeros(n, n)
    ident = identity(n)
    for k in range(1, n + 1):
        mk = matmul(m, add(mk, scale(coeffs[-1], ident)))
        coeffs.append(-trace(mk) / k)
    return coeffs
