"""Elementary zipper-opening moves and the induced change of coordinates.

Switch names are kept across a move (s1 becomes s1', s2 becomes s2'), so the
complementary triangles, and hence all face dots, keep their names.  The
middle branch ``m`` is replaced by a fresh branch ``m'``.

The substitution matrix M has one row per old dot and one column per new dot
and expresses each old coordinate in the new ones:

* the dots of ``m`` come from the old switch condition at the switch where
  ``m`` is the outgoing branch;
* a branch whose end moves into an ``out`` slot is rewritten through the new
  switch condition there;
* every other dot is unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .symplectic import build_omega, restricted_form
from .traintrack import (
    End,
    Track,
    TrackValidationError,
    dot_index,
    dots,
    kernel_basis,
    sigma_dot,
    switch_relation_matrix,
    tau_dot,
    toward,
    validate,
)

KINDS = ("I", "II", "Im", "IIm")


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class MoveSpec:
    kind: str
    branch: str


def _ends(track: Track, branch: str) -> tuple:
    where = track.slot_of()
    return where[End(branch, 0)], where[End(branch, 1)]


def _site(track: Track, spec: MoveSpec) -> tuple:
    """Return (s1, s2, end of m at s1, end of m at s2) or raise."""
    if spec.kind not in KINDS:
        raise MoveError("unknown move kind %r" % spec.kind)
    if spec.branch not in track.branches:
        raise MoveError("unknown branch %s" % spec.branch)
    (sa, slot_a), (sb, slot_b) = _ends(track, spec.branch)
    ea, eb = End(spec.branch, 0), End(spec.branch, 1)
    if sa == sb:
        raise MoveError("branch %s has both ends at switch %s" % (spec.branch, sa))
    if spec.kind in ("I", "Im"):
        if slot_a == slot_b == "out":
            return sa, sb, ea, eb
        raise MoveError("move %s needs a branch that is outgoing at both ends" % spec.kind)
    inner = "left" if spec.kind == "II" else "right"
    if (slot_a, slot_b) == (inner, "out"):
        return sa, sb, ea, eb
    if (slot_a, slot_b) == ("out", inner):
        return sb, sa, eb, ea
    raise MoveError("move %s needs a branch that is %s at one end and outgoing at the other" % (spec.kind, inner))


def eligible_sites(track: Track, kind: str) -> list:
    sites = []
    for b in track.branches:
        try:
            _site(track, MoveSpec(kind, b))
        except MoveError:
            continue
        sites.append(MoveSpec(kind, b))
    return sites


def _fresh_name(track: Track, branch: str) -> str:
    name = branch + "'"
    while name in track.branches:
        name += "'"
    return name


def _rewire(track: Track, spec: MoveSpec) -> tuple:
    s1, s2, _, _ = _site(track, spec)
    new = _fresh_name(track, spec.branch)
    m0, m1 = End(new, 0), End(new, 1)
    o1, l1, r1 = track.switches[s1]
    o2, l2, r2 = track.switches[s2]
    if spec.kind == "I":
        sw1, sw2 = (r2, l1, m0), (r1, l2, m1)
    elif spec.kind == "Im":
        sw1, sw2 = (l2, m0, r1), (l1, m1, r2)
    elif spec.kind == "II":
        # before: m is left at s1 and out at s2
        sw1, sw2 = (m0, r2, r1), (o1, l2, m1)
    else:
        # before: m is right at s1 and out at s2
        sw1, sw2 = (m0, l1, l2), (o1, m1, r2)
    switches = dict(track.switches)
    switches[s1], switches[s2] = sw1, sw2
    branches = [new if b == spec.branch else b for b in track.branches]
    return Track(track.name, branches, switches), s1, s2, new


def _switch_rhs(track: Track, s: str, a: int, n: int, index: dict) -> dict:
    """Coordinates of sigma(out away from s) at level a: left + right - face dots."""
    _, l, r = track.switches[s]
    tri = track.triangle_at(s)
    row: dict = {}
    for d, c in (
        (sigma_dot(track, l.branch, toward(l), a, n), 1),
        (sigma_dot(track, r.branch, toward(r), a, n), 1),
    ):
        row[index[d]] = row.get(index[d], 0) + c
    for b2 in range(1, n - a):
        d = tau_dot(track, tri.name, s, (a, b2, n - a - b2))
        row[index[d]] = row.get(index[d], 0) - 1
    return row


def apply_move(track: Track, spec: MoveSpec, n: int) -> tuple:
    """Return (new track, substitution matrix M) for the move at ``spec``."""
    s1, s2, m_s1, m_s2 = _site(track, spec)
    old_report = validate(track)
    new_track, s1, s2, new_name = _rewire(track, spec)
    try:
        new_report = validate(new_track)
    except TrackValidationError as exc:
        raise MoveError("move does not produce a valid track: %s" % exc) from None
    if new_report != old_report:
        raise MoveError("move changed the counts %s -> %s" % (old_report, new_report))
    if [t.corners for t in new_track.triangles()] != [t.corners for t in track.triangles()]:
        raise MoveError("triangle correspondence is not the identity")

    old_dots = dots(track, n)
    new_index = dot_index(new_track, n)
    rows: dict = {}

    # branch ends that land in an out slot at a moved switch
    old_where = track.slot_of()
    for s in (s1, s2):
        out_end = new_track.switches[s][0]
        if out_end.branch == new_name or old_where[out_end] == (s, "out"):
            continue
        for a in range(1, n):
            # the old dot is the new sigma of that end oriented away from s
            d = sigma_dot(track, out_end.branch, not toward(out_end), a, n)
            if d not in rows:
                rows[d] = _switch_rhs(new_track, s, a, n, new_index)

    def old_row(d) -> dict:
        if d in rows:
            return rows[d]
        return {new_index[d]: 1}

    # dots of the deleted branch via the old switch condition where it is outgoing
    out_at = s1 if spec.kind in ("I", "Im") else s2
    m_end = m_s1 if out_at == s1 else m_s2
    _, l, r = track.switches[out_at]
    tri = track.triangle_at(out_at)
    m_rows = {}
    for a in range(1, n):
        row: dict = {}
        terms = [(sigma_dot(track, l.branch, toward(l), a, n), 1), (sigma_dot(track, r.branch, toward(r), a, n), 1)]
        terms += [(tau_dot(track, tri.name, out_at, (a, b2, n - a - b2)), -1) for b2 in range(1, n - a)]
        for d, c in terms:
            for j, v in old_row(d).items():
                row[j] = row.get(j, 0) + c * v
        m_rows[sigma_dot(track, spec.branch, not toward(m_end), a, n)] = row
    rows.update(m_rows)

    size = len(new_index)
    matrix = []
    for d in old_dots:
        r_ = old_row(d)
        matrix.append(tuple(r_.get(j, 0) for j in range(size)))
    return new_track, tuple(matrix)


def invariance_check(track: Track, spec: MoveSpec, n: int) -> bool:
    """(M K')^T Omega_old (M K') == K'^T Omega_new K' and M K' lies in ker R_old."""
    new_track, m = apply_move(track, spec, n)
    k_new = kernel_basis(switch_relation_matrix(new_track, n), len(dots(new_track, n)))
    mk = la.matmul(m, k_new)
    r_old = switch_relation_matrix(track, n)
    if any(x != 0 for row in la.matmul(r_old, mk) for x in row):
        return False
    lhs = restricted_form(build_omega(track, n), mk)
    rhs = restricted_form(build_omega(new_track, n), k_new)
    return lhs == rhs


def offshell_check(track: Track, spec: MoveSpec, n: int) -> bool:
    """The unrestricted identity M^T Omega_old M == Omega_new."""
    new_track, m = apply_move(track, spec, n)
    lhs = la.matmul(la.transpose(m), la.matmul(build_omega(track, n), m))
    rhs = build_omega(new_track, n)
    return all(x == y for ra, rb in zip(lhs, rhs) for x, y in zip(ra, rb))


def local_offshell_check(track: Track, spec: MoveSpec, n: int) -> bool:
    """The identity restricted to the contributions of the two switches of the move."""
    s1, s2, _, _ = _site(track, spec)
    new_track, m = apply_move(track, spec, n)
    old = build_omega(track, n, switches=(s1, s2), faces=False)
    lhs = la.matmul(la.transpose(m), la.matmul(old, m))
    rhs = build_omega(new_track, n, switches=(s1, s2), faces=False)
    return all(x == y for ra, rb in zip(lhs, rhs) for x, y in zip(ra, rb))
