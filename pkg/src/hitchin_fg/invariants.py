"""Triangle and shear invariants of triangulated polygons of flags.

Vertices are indexed 0..m-1 counterclockwise around the circle and labelled
``p1``..``pm``.  Everything is multiplicative: a triangle invariant is a
triple ratio and a shear is a double ratio, so additive relations between the
logarithmic invariants become exact product relations.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .flags import (
    DegenerateFlagsError,
    discrete_triangle,
    double_ratio,
    rational_normal_curve_flag,
    slithering_elementary,
    triple_ratio,
)
from .flows import eruption_left, eruption_right, shear


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class PolygonConfig:
    flags: tuple
    triangles: tuple

    @property
    def size(self) -> int:
        return len(self.flags)

    @property
    def n(self) -> int:
        return self.flags[0].dim

    def label(self, i: int) -> str:
        return "p%d" % (i + 1)

    def diagonals(self) -> list:
        m = self.size
        sides = set()
        for t in self.triangles:
            for u, v in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
                if (v - u) % m not in (1, m - 1):
                    sides.add((min(u, v), max(u, v)))
        return sorted(sides)


def _triangulation(m: int) -> tuple:
    """Fan triangulation from the first vertex."""
    return tuple((0, i, i + 1) for i in range(1, m - 1))


def _ccw_from(tri: tuple, vertex: int) -> tuple:
    if vertex not in tri:
        raise ConfigError("vertex %d is not in triangle %s" % (vertex, tri))
    k = tri.index(vertex)
    return tri[k:] + tri[:k]


def _on_arc(w: int, start: int, end: int, m: int) -> bool:
    """Whether w lies strictly inside the counterclockwise arc from start to end."""
    return 0 < (w - start) % m < (end - start) % m


def _arc(start: int, end: int, m: int) -> list:
    return [w for w in range(m) if _on_arc(w, start, end, m)]


def triangle_invariant(config: PolygonConfig, triangle: tuple, vertex: int, a: int, b: int, c: int) -> Fraction:
    """X_abc of the triangle's flags read counterclockwise from ``vertex``."""
    if tuple(triangle) not in config.triangles:
        raise ConfigError("%s is not a triangle of the configuration" % (triangle,))
    x, y, z = _ccw_from(tuple(triangle), vertex)
    return triple_ratio(config.flags[x], config.flags[y], config.flags[z], a, b, c)


def _third_vertices(config: PolygonConfig, u: int, v: int) -> list:
    return [[w for w in t if w not in (u, v)][0] for t in config.triangles if u in t and v in t]


def shear_adjacent(config: PolygonConfig, edge: tuple, a: int) -> Fraction:
    """X_ab(F(x), F(y); F(u), F(v)) for the diagonal oriented from y to x.

    ``edge`` is the oriented pair (y, x), so x is the positive endpoint; u is
    the third vertex of the triangle on the right and v that on the left.
    """
    y, x = edge
    m = config.size
    thirds = _third_vertices(config, x, y)
    if len(thirds) != 2:
        raise ConfigError("%s is not a diagonal with a triangle on each side" % (edge,))
    right = [w for w in thirds if _on_arc(w, y, x, m)]
    left = [w for w in thirds if not _on_arc(w, y, x, m)]
    fl = config.flags
    return double_ratio(fl[x], fl[y], fl[right[0]], fl[left[0]], a, config.n - a)


def _dual_path(config: PolygonConfig, start: tuple, end: tuple) -> list:
    """Triangles from ``start`` to ``end`` in the dual tree, inclusive."""
    tris = list(config.triangles)
    if start not in tris or end not in tris:
        raise ConfigError("unknown triangle")
    def adjacent(t, s):
        return len(set(t) & set(s)) == 2
    prev = {start: None}
    queue = [start]
    while queue:
        t = queue.pop(0)
        for s in tris:
            if s not in prev and adjacent(t, s):
                prev[s] = t
                queue.append(s)
    path = [end]
    while path[-1] != start:
        path.append(prev[path[-1]])
    return path[::-1]


def _cw_facing(tri: tuple, shared: set) -> tuple:
    """Vertices (x, y, z) of ``tri`` in clockwise order with xy the side ``shared``."""
    for k in range(3):
        x, y, z = tri[(k + 1) % 3], tri[k], tri[(k + 2) % 3]
        if {x, y} == shared:
            return x, y, z
    raise ConfigError("side %s not in triangle %s" % (shared, tri))


def _ccw_facing(tri: tuple, shared: set) -> tuple:
    for k in range(3):
        x, y, z = tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]
        if {x, y} == shared:
            return x, y, z
    raise ConfigError("side %s not in triangle %s" % (shared, tri))


def _separation_data(config: PolygonConfig, t: tuple, t2: tuple) -> tuple:
    """Labels (x, y, z), (x2, y2, z2) and the slithering map from the T2 leaf to the T leaf."""
    path = _dual_path(config, t, t2)
    if len(path) < 2:
        raise ConfigError("the two triangles must be distinct")
    fl = config.flags
    x, y, z = _cw_facing(t, set(t) & set(path[1]))
    sigma = la.identity(config.n)
    cx, cy = x, y
    for mid, nxt in zip(path[1:-1], path[2:]):
        exit_side = set(mid) & set(nxt)
        if cx in exit_side:
            ny = (exit_side - {cx}).pop()
            step = slithering_elementary("first", fl[cx], fl[cy], fl[ny])
            cy = ny
        else:
            nx = (exit_side - {cy}).pop()
            step = slithering_elementary("second", fl[cx], fl[cy], fl[nx])
            cx = nx
        sigma = la.matmul(sigma, step)
    x2, y2, z2 = _ccw_facing(t2, {cx, cy})
    if (x2, y2) != (cx, cy):
        raise ConfigError("inconsistent leaf orientation")
    return (x, y, z), (x2, y2, z2), sigma


def shear_separated(config: PolygonConfig, t: tuple, t2: tuple, a: int) -> Fraction:
    """X_ab(F(x), F(y); F(z), Sigma F(z2)) with T read clockwise and T2 counterclockwise."""
    (x, y, z), (_, _, z2), sigma = _separation_data(config, tuple(t), tuple(t2))
    fl = config.flags
    return double_ratio(fl[x], fl[y], fl[z], fl[z2].moved_by(sigma), a, config.n - a)


def shear_separated_from_far_side(config: PolygonConfig, t: tuple, t2: tuple, a: int) -> Fraction:
    """The same shear evaluated at T2: X_ab(F(x2), F(y2); Sigma^-1 F(z), F(z2))."""
    (_, _, z), (x2, y2, z2), sigma = _separation_data(config, tuple(t), tuple(t2))
    fl = config.flags
    return double_ratio(fl[x2], fl[y2], fl[z].moved_by(la.inverse(sigma)), fl[z2], a, config.n - a)


def pivot(config: PolygonConfig, t: tuple, mid: tuple, t2: tuple) -> tuple:
    """The vertex of ``mid`` shared by its sides facing t and t2, and its side seen from t."""
    path = _dual_path(config, tuple(t), tuple(t2))
    if tuple(mid) not in path[1:-1]:
        raise ConfigError("%s does not separate %s from %s" % (mid, t, t2))
    k = path.index(tuple(mid))
    enter = set(mid) & set(path[k - 1])
    leave = set(mid) & set(path[k + 1])
    (x,) = enter & leave
    # seen from the previous triangle, the first vertex of its clockwise labelling is on the left
    left_vertex = _cw_facing(path[k - 1], enter)[0]
    return x, ("left" if x == left_vertex else "right")


def quasi_additivity_terms(config: PolygonConfig, t: tuple, mid: tuple, t2: tuple, a: int) -> tuple:
    """Return (lhs, rhs, side) of the multiplicative quasi-additivity relation."""
    n = config.n
    b = n - a
    x, side = pivot(config, t, mid, t2)
    lhs = shear_separated(config, t, t2, a)
    rhs = shear_separated(config, t, mid, a) * shear_separated(config, mid, t2, a)
    if side == "left":
        for b2 in range(1, n - a):
            rhs /= triangle_invariant(config, mid, x, a, b2, n - a - b2)
    else:
        for c2 in range(1, n - b):
            rhs /= triangle_invariant(config, mid, x, b, c2, n - b - c2)
    return lhs, rhs, side


def quasi_additivity_check(config: PolygonConfig, t: tuple, mid: tuple, t2: tuple, a: int) -> bool:
    lhs, rhs, _ = quasi_additivity_terms(config, t, mid, t2, a)
    return lhs == rhs


# generation ------------------------------------------------------------

def _random_multiplier(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def erupt(config: PolygonConfig, tri: tuple, abc: tuple, u) -> PolygonConfig:
    """Scale the triangle invariant of ``tri`` at its first vertex and index ``abc`` by u."""
    i, j, k = tri
    m = config.size
    fl = list(config.flags)
    e, f, g = fl[i], fl[j], fl[k]
    left = eruption_left(e, f, g, *abc, u)
    right = eruption_right(e, f, g, *abc, u)
    for w in [k] + _arc(k, i, m):
        fl[w] = config.flags[w].moved_by(left)
    for w in _arc(j, k, m):
        fl[w] = config.flags[w].moved_by(right)
    return PolygonConfig(tuple(fl), config.triangles)


def shear_along(config: PolygonConfig, diagonal: tuple, a: int, u) -> PolygonConfig:
    """Apply the shear of the diagonal (i, j) to the vertices on the arc from i to j."""
    i, j = diagonal
    m = config.size
    fl = list(config.flags)
    s = shear(fl[i], fl[j], a, config.n - a, u)
    for w in _arc(i, j, m):
        fl[w] = config.flags[w].moved_by(s)
    return PolygonConfig(tuple(fl), config.triangles)


def is_positive(config: PolygonConfig) -> bool:
    n = config.n
    try:
        for t in config.triangles:
            for abc in discrete_triangle(n):
                if triangle_invariant(config, t, t[0], *abc) <= 0:
                    return False
        for i, j in config.diagonals():
            for a in range(1, n):
                if shear_adjacent(config, (i, j), a) <= 0:
                    return False
    except DegenerateFlagsError:
        return False
    return True


SHAPES = {"quad": 4, "pentagon": 5}


def generate_positive_config(n: int, seed: int, shape: str = "pentagon", budget: int = 20) -> PolygonConfig:
    """Osculating flags of the rational normal curve, deformed by random flows."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if shape not in SHAPES:
        raise ValueError("shape must be one of %s" % ", ".join(SHAPES))
    m = SHAPES[shape]
    rng = random.Random(seed)
    for _ in range(budget):
        params = sorted({Fraction(rng.randint(-20, 20), rng.randint(1, 4)) for _ in range(m)})
        if len(params) < m:
            continue
        config = PolygonConfig(tuple(rational_normal_curve_flag(t, n) for t in params), _triangulation(m))
        for tri in config.triangles:
            for abc in discrete_triangle(n):
                config = erupt(config, tri, abc, _random_multiplier(rng))
        for d in config.diagonals():
            for a in range(1, n):
                config = shear_along(config, d, a, _random_multiplier(rng))
        if is_positive(config):
            return config
    raise ConfigError("no positive configuration found for seed %d within %d attempts" % (seed, budget))
