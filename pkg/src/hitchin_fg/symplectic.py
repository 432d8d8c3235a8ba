"""The symplectic matrix in the dot basis of a train track.

Convention: omega = sum over i < j of Omega[i][j] d(theta_i) ^ d(theta_j), with
Omega antisymmetric, so a contribution c d(theta_i) ^ d(theta_j) adds c at
(i, j) and -c at (j, i).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .flags import discrete_triangle
from .traintrack import (
    Track,
    dot_index,
    dots,
    kernel_basis,
    sigma_dot,
    switch_relation_matrix,
    tau_dot,
    toward,
    validate,
)


def _check_triple(a: int, b: int, c: int, n: int) -> None:
    if min(a, b, c) < 1 or a + b + c != n:
        raise ValueError("(%d, %d, %d) is not in the discrete triangle of size %d" % (a, b, c, n))


def coeff_face(a: int, b: int, c: int, a2: int, b2: int, c2: int, n: int) -> int:
    """Coefficient between two face dots of the same triangle, read at one corner."""
    _check_triple(a, b, c, n)
    _check_triple(a2, b2, c2, n)
    if a <= a2:
        if b <= b2:
            return a2 * b - a * b2  # here c >= c2 is forced
        return a * c2 - a2 * c if c <= c2 else b2 * c - b * c2
    if b >= b2:
        return a2 * b - a * b2  # here c <= c2 is forced
    return b2 * c - b * c2 if c <= c2 else a * c2 - a2 * c


def coeff_face_cases(a: int, b: int, c: int, a2: int, b2: int, c2: int) -> list:
    """Values of every case of the table whose condition holds; all should agree."""
    table = [
        (a <= a2 and b <= b2 and c >= c2, a2 * b - a * b2),
        (a <= a2 and b >= b2 and c <= c2, a * c2 - a2 * c),
        (a <= a2 and b >= b2 and c >= c2, b2 * c - b * c2),
        (a >= a2 and b <= b2 and c <= c2, b2 * c - b * c2),
        (a >= a2 and b <= b2 and c >= c2, a * c2 - a2 * c),
        (a >= a2 and b >= b2 and c <= c2, a2 * b - a * b2),
    ]
    return [v for cond, v in table if cond]


def coeff_mixed(a: int, a2: int, n: int) -> int:
    if not (1 <= a <= n - 1 and 1 <= a2 <= n - 1):
        raise ValueError("branch levels must lie in 1..n-1")
    return a2 * (n - a) if a >= a2 else a * (n - a2)


class _Builder:
    def __init__(self, size: int):
        self.m = [[Fraction(0)] * size for _ in range(size)]

    def wedge(self, i: int, j: int, c) -> None:
        if i != j and c:
            self.m[i][j] += c
            self.m[j][i] -= c

    def result(self) -> tuple:
        out = []
        for row in self.m:
            if any(x.denominator != 1 for x in row):
                raise ArithmeticError("symplectic matrix has a non-integer entry")
            out.append(tuple(int(x) for x in row))
        return tuple(out)


def build_omega(track: Track, n: int, switches=None, faces: bool = True) -> tuple:
    """Omega in the dot basis.

    ``switches`` and ``faces`` restrict the sum to the contributions of some
    switches and optionally drop the triangle terms; the defaults give the
    full matrix.
    """
    index = dot_index(track, n)
    omega = _Builder(len(index))
    theta = discrete_triangle(n)
    for tri in track.triangles() if faces else ():
        for t in theta:
            for t2 in theta:
                i = index[tau_dot(track, tri.name, tri.corners[0], t)]
                j = index[tau_dot(track, tri.name, tri.corners[0], t2)]
                omega.wedge(i, j, Fraction(coeff_face(*t, *t2, n), 2))
    for s, (_, l, r) in track.switches.items():
        if switches is not None and s not in switches:
            continue
        tri = track.triangle_at(s)
        for a in range(1, n):
            left = index[sigma_dot(track, l.branch, toward(l), a, n)]
            right = index[sigma_dot(track, r.branch, toward(r), a, n)]
            for a2 in range(1, n):
                c = coeff_mixed(a, a2, n)
                omega.wedge(left, index[sigma_dot(track, r.branch, toward(r), a2, n)], c)
                for b2 in range(1, n - a2):
                    face = index[tau_dot(track, tri.name, s, (a2, b2, n - a2 - b2))]
                    omega.wedge(left, face, -c)
                    omega.wedge(right, face, c)
    return omega.result()


def restricted_form(omega, kernel) -> tuple:
    """K^T Omega K for a matrix K whose columns span the constraint subspace."""
    size = len(omega)
    if len(kernel) != size:
        raise la.DimensionError("kernel matrix has %d rows, expected %d" % (len(kernel), size))
    k = la.shape(kernel)[1]
    if k == 0:
        return ()
    return la.matmul(la.transpose(kernel), la.matmul(omega, kernel))


@dataclass(frozen=True)
class RankReport:
    D: int
    relation_rank: int
    kernel_dim: int
    omega_restricted_rank: int

    def __str__(self) -> str:
        return "D=%d relations=%d kernel=%d omega_rank=%d" % (
            self.D,
            self.relation_rank,
            self.kernel_dim,
            self.omega_restricted_rank,
        )


def rank_check(track: Track, n: int) -> RankReport:
    validate(track)
    r = switch_relation_matrix(track, n)
    size = len(dots(track, n))
    kernel = kernel_basis(r, size)
    kdim = la.shape(kernel)[1] if kernel else 0
    restricted = restricted_form(build_omega(track, n), kernel)
    return RankReport(size, la.rank(r), kdim, la.rank(restricted) if restricted else 0)


def corollary_omega(track: Track) -> tuple:
    """The n = 3 matrix assembled switch by switch from the closed n = 3 display."""
    n = 3
    index = dot_index(track, n)
    omega = _Builder(len(index))
    for s, (_, l, r) in track.switches.items():
        tri = track.triangle_at(s)
        left = [index[sigma_dot(track, l.branch, toward(l), a, n)] for a in (1, 2)]
        right = [index[sigma_dot(track, r.branch, toward(r), a, n)] for a in (1, 2)]
        face = index[tau_dot(track, tri.name, s, (1, 1, 1))]
        omega.wedge(left[0], right[0], 2)
        omega.wedge(left[1], right[1], 2)
        omega.wedge(left[0], right[1], 1)
        omega.wedge(left[1], right[0], 1)
        for dot, c in ((right[0], 2), (right[1], 1), (left[0], -2), (left[1], -1)):
            omega.wedge(dot, face, c)
    return omega.result()


def n3_corollary_check(track: Track) -> bool:
    return build_omega(track, 3) == corollary_omega(track)
