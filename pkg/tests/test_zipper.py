import pytest

from hitchin_fg import linalg as la
from hitchin_fg.traintrack import dots, validate
from hitchin_fg.zipper import (
    KINDS,
    MoveError,
    MoveSpec,
    apply_move,
    eligible_sites,
    invariance_check,
    local_offshell_check,
    offshell_check,
)

SITES = {
    "I": ["b07", "b18"],
    "II": ["b04", "b11", "b16", "b17"],
    "Im": ["b07", "b18"],
    "IIm": ["b01", "b05", "b13", "b15"],
}


def test_eligible_sites(genus2):
    for kind in KINDS:
        assert [s.branch for s in eligible_sites(genus2, kind)] == SITES[kind]


@pytest.mark.parametrize("kind", KINDS)
def test_move_keeps_counts_and_names(genus2, kind):
    spec = eligible_sites(genus2, kind)[0]
    new, m = apply_move(genus2, spec, 3)
    assert validate(new) == validate(genus2)
    assert spec.branch + "'" in new.branches and spec.branch not in new.branches
    assert la.shape(m) == (len(dots(genus2, 3)), len(dots(new, 3)))
    assert [t.corners for t in new.triangles()] == [t.corners for t in genus2.triangles()]


@pytest.mark.parametrize("kind", KINDS)
def test_invariance_n3(genus2, kind):
    for spec in eligible_sites(genus2, kind):
        assert invariance_check(genus2, spec, 3)


def test_ineligible_site(genus2):
    with pytest.raises(MoveError):
        apply_move(genus2, MoveSpec("I", "b01"), 3)
    with pytest.raises(MoveError):
        apply_move(genus2, MoveSpec("III", "b07"), 3)
    with pytest.raises(MoveError):
        apply_move(genus2, MoveSpec("I", "nope"), 3)


def test_local_identity_for_type_one_moves(genus2):
    for kind in ("I", "Im"):
        for spec in eligible_sites(genus2, kind):
            assert local_offshell_check(genus2, spec, 3)


def test_offshell_identity_is_not_a_property(genus2):
    # the change of coordinates preserves the form only on the constraint subspace
    spec = eligible_sites(genus2, "II")[0]
    assert invariance_check(genus2, spec, 3)
    assert not offshell_check(genus2, spec, 3)
