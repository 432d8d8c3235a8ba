"""Trivalent train tracks: parsing, face tracing, dots and switch relations.

A switch records three branch ends in the slots ``out``, ``left``, ``right``.
Read counterclockwise around the switch, the slots come in the order
out, left, right; this cyclic order is the ribbon structure used to trace the
complementary regions.  Each region is walked with the region on the left,
so the cusps of a region are met in counterclockwise order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import NamedTuple

from . import linalg as la
from .flags import discrete_triangle

SLOTS = ("out", "left", "right")


class TrackSyntaxError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else "line %d: %s" % (line, message))


class TrackValidationError(ValueError):
    pass


class End(NamedTuple):
    branch: str
    side: int

    def __str__(self) -> str:
        return "%s.%d" % self

    def other(self) -> "End":
        return End(self.branch, 1 - self.side)


class BranchDot(NamedTuple):
    branch: str
    a: int


class FaceDot(NamedTuple):
    triangle: str
    abc: tuple


@dataclass(frozen=True)
class Triangle:
    """A complementary region; ``corners`` lists its cusp switches counterclockwise from the base."""

    name: str
    corners: tuple

    def corner_index(self, switch: str) -> int:
        try:
            return self.corners.index(switch)
        except ValueError:
            raise KeyError("switch %s is not a corner of triangle %s" % (switch, self.name)) from None


@dataclass
class Track:
    name: str
    branches: list
    switches: dict
    _faces: list | None = field(default=None, repr=False)
    _triangles: list | None = field(default=None, repr=False)

    def slot_of(self) -> dict:
        """Map each branch end to its (switch, slot)."""
        where = {}
        for s, slots in self.switches.items():
            for slot, end in zip(SLOTS, slots):
                where[end] = (s, slot)
        return where

    # ribbon structure -------------------------------------------------

    def faces(self) -> list:
        """Boundary walks, each a list of corners (switch, arriving slot, leaving slot)."""
        if self._faces is None:
            self._faces = _trace_faces(self)
        return self._faces

    def triangles(self) -> list:
        if self._triangles is None:
            self._triangles = self._find_triangles()
        return self._triangles

    def _find_triangles(self) -> list:
        tris = []
        for walk in self.faces():
            cusps = [s for s, arr, dep in walk if arr == "right" and dep == "left"]
            if len(cusps) != 3:
                raise TrackValidationError(
                    "complementary region through switches %s has %d cusps, expected 3"
                    % (", ".join(sorted({s for s, _, _ in walk})), len(cusps))
                )
            k = min(range(3), key=lambda i: cusps[i])
            corners = tuple(cusps[k:] + cusps[:k])
            tris.append(Triangle(corners[0], corners))
        return sorted(tris, key=lambda t: t.name)

    def triangle_at(self, switch: str) -> Triangle:
        """The region U_s whose cusp sits at ``switch``."""
        for t in self.triangles():
            if switch in t.corners:
                return t
        raise KeyError(switch)

    def triangle(self, name: str) -> Triangle:
        for t in self.triangles():
            if t.name == name:
                return t
        raise KeyError(name)


def _trace_faces(track: Track) -> list:
    where = track.slot_of()
    # arriving through slot h, the walk leaves through the clockwise neighbour
    turn = {"right": "left", "left": "out", "out": "right"}
    seen = set()
    faces = []
    for start in sorted(where):
        if start in seen:
            continue
        walk = []
        dart = start  # the end through which the walk leaves a switch
        while dart not in seen:
            seen.add(dart)
            arrive = dart.other()
            s, slot = where[arrive]
            nxt = turn[slot]
            walk.append((s, slot, nxt))
            dart = track.switches[s][SLOTS.index(nxt)]
        faces.append(walk)
    return faces


# parsing ---------------------------------------------------------------

_END_RE = re.compile(r"^([A-Za-z0-9_\-']+)\.([01])$")
_ID_RE = re.compile(r"^[A-Za-z0-9_\-']+$")


def parse_track(text: str) -> Track:
    name = None
    branches: list = []
    switches: dict = {}
    used: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if name is None:
            if words[0] != "traintrack" or len(words) != 2:
                raise TrackSyntaxError("first line must be 'traintrack <name>'", lineno)
            name = words[1]
            continue
        if words[0] == "branch":
            if len(words) != 2 or not _ID_RE.match(words[1]):
                raise TrackSyntaxError("expected 'branch <id>'", lineno)
            if words[1] in branches:
                raise TrackSyntaxError("duplicate branch %s" % words[1], lineno)
            branches.append(words[1])
        elif words[0] == "switch":
            if len(words) != 5 or not _ID_RE.match(words[1]):
                raise TrackSyntaxError("expected 'switch <id> out=.. left=.. right=..'", lineno)
            sname = words[1]
            if sname in switches:
                raise TrackSyntaxError("duplicate switch %s" % sname, lineno)
            slots = {}
            for w in words[2:]:
                key, _, val = w.partition("=")
                m = _END_RE.match(val)
                if key not in SLOTS or key in slots or not m:
                    raise TrackSyntaxError("bad slot assignment %r" % w, lineno)
                end = End(m.group(1), int(m.group(2)))
                if end.branch not in branches:
                    raise TrackSyntaxError("unknown branch %s" % end.branch, lineno)
                if end in used:
                    raise TrackSyntaxError("branch end %s is already attached at switch %s" % (end, used[end]), lineno)
                used[end] = sname
                slots[key] = end
            switches[sname] = tuple(slots[k] for k in SLOTS)
        else:
            raise TrackSyntaxError("unknown keyword %r" % words[0], lineno)
    if name is None:
        raise TrackSyntaxError("empty track file")
    for b in branches:
        for side in (0, 1):
            if End(b, side) not in used:
                raise TrackSyntaxError("unattached end %s.%d" % (b, side))
    return Track(name, branches, switches)


def format_track(track: Track) -> str:
    lines = ["traintrack %s" % track.name]
    lines += ["branch %s" % b for b in track.branches]
    for s, slots in track.switches.items():
        lines.append("switch %s " % s + " ".join("%s=%s" % (k, e) for k, e in zip(SLOTS, slots)))
    return "\n".join(lines) + "\n"


# validation ------------------------------------------------------------

@dataclass(frozen=True)
class Report:
    V: int
    E: int
    F: int
    chi: int
    genus: int

    def __str__(self) -> str:
        return "V=%d E=%d F=%d chi=%d genus=%d" % (self.V, self.E, self.F, self.chi, self.genus)


def _connected(track: Track) -> bool:
    if not track.switches:
        return False
    adj: dict = {s: set() for s in track.switches}
    where = track.slot_of()
    for b in track.branches:
        s0, s1 = where[End(b, 0)][0], where[End(b, 1)][0]
        adj[s0].add(s1)
        adj[s1].add(s0)
    start = next(iter(adj))
    stack, seen = [start], {start}
    while stack:
        for t in adj[stack.pop()]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return len(seen) == len(adj)


def validate(track: Track) -> Report:
    V, E = len(track.switches), len(track.branches)
    if 3 * V != 2 * E:
        raise TrackValidationError("3V = 2E fails: V=%d E=%d" % (V, E))
    if not _connected(track):
        raise TrackValidationError("track is not connected")
    tris = track.triangles()
    F = len(tris)
    cusps = [s for t in tris for s in t.corners]
    if len(cusps) != V or set(cusps) != set(track.switches):
        raise TrackValidationError("cusps do not match switches one to one")
    chi = V - E + F
    if chi != -F // 2 or F % 2:
        raise TrackValidationError("chi = %d but there are %d triangles" % (chi, F))
    if chi >= 0 or chi % 2:
        raise TrackValidationError("chi = %d is not negative and even" % chi)
    return Report(V, E, F, chi, (2 - chi) // 2)


# dots and relations ----------------------------------------------------

def dots(track: Track, n: int) -> list:
    if n < 2:
        raise ValueError("n must be at least 2")
    out: list = [BranchDot(b, a) for b in track.branches for a in range(1, n)]
    out += [FaceDot(t.name, abc) for t in track.triangles() for abc in discrete_triangle(n)]
    return out


def dot_count(chi: int, n: int) -> int:
    return -chi * (n - 1) * (n + 7)


def sigma_dot(track: Track, branch: str, forward: bool, a: int, n: int) -> BranchDot:
    """Dot of level ``a`` on ``branch``; ``forward`` means oriented from end .0 to end .1."""
    if branch not in track.branches:
        raise KeyError(branch)
    if not 1 <= a <= n - 1:
        raise ValueError("branch level %d out of range 1..%d" % (a, n - 1))
    return BranchDot(branch, a if forward else n - a)


def rotate(abc: tuple, k: int) -> tuple:
    """Apply (a, b, c) -> (c, a, b) k times."""
    a, b, c = abc
    for _ in range(k % 3):
        a, b, c = c, a, b
    return (a, b, c)


def tau_dot(track: Track, triangle: str, corner: str, abc: tuple) -> FaceDot:
    t = track.triangle(triangle)
    a, b, c = abc
    if min(a, b, c) < 1:
        raise ValueError("indices must be positive")
    return FaceDot(t.name, rotate(abc, t.corner_index(corner)))


def toward(end: End) -> bool:
    """Whether orienting a branch toward the switch at ``end`` is the canonical orientation."""
    return end.side == 1


def dot_index(track: Track, n: int) -> dict:
    return {d: i for i, d in enumerate(dots(track, n))}


def switch_relation_matrix(track: Track, n: int) -> tuple:
    """One integer row per switch and level: out - left - right + (face dots) = 0."""
    index = dot_index(track, n)
    rows = []
    for s, (o, l, r) in track.switches.items():
        tri = track.triangle_at(s)
        for a in range(1, n):
            row = [0] * len(index)
            row[index[sigma_dot(track, o.branch, not toward(o), a, n)]] += 1
            row[index[sigma_dot(track, l.branch, toward(l), a, n)]] -= 1
            row[index[sigma_dot(track, r.branch, toward(r), a, n)]] -= 1
            for b2 in range(1, n - a):
                row[index[tau_dot(track, tri.name, s, (a, b2, n - a - b2))]] += 1
            rows.append(tuple(row))
    return tuple(rows)


def kernel_basis(r, ncols: int | None = None) -> tuple:
    """Rational matrix (ncols rows) whose columns span the kernel of ``r``."""
    if ncols is None:
        if not r:
            raise la.DimensionError("zero-row matrix needs an explicit column count")
        ncols = len(r[0])
    basis = la.kernel(r, ncols) if r else la.kernel((), ncols)
    return tuple(tuple(v[i] for v in basis) for i in range(ncols))


def describe_dot(d) -> str:
    if isinstance(d, BranchDot):
        return "sigma %s %d" % (d.branch, d.a)
    return "tau %s %d %d %d" % ((d.triangle,) + tuple(d.abc))
