from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hitchin_fg import linalg as la
from hitchin_fg.checks import check_coefficients
from hitchin_fg.flags import discrete_triangle
from hitchin_fg.killing import kf_RL
from hitchin_fg.symplectic import (
    build_omega,
    coeff_face,
    coeff_face_cases,
    coeff_mixed,
    n3_corollary_check,
    rank_check,
    restricted_form,
)
from hitchin_fg.traintrack import FaceDot, dots


def test_face_examples():
    assert coeff_face(1, 1, 1, 1, 1, 1, 3) == 0
    assert coeff_face(2, 1, 1, 1, 2, 1, 4) == 1
    assert coeff_face(1, 2, 1, 2, 1, 1, 4) == -1


def test_mixed_examples():
    assert coeff_mixed(1, 1, 3) == 2
    assert coeff_mixed(1, 2, 3) == 1
    assert coeff_mixed(2, 1, 3) == 1


def test_invalid_indices():
    with pytest.raises(ValueError):
        coeff_face(1, 1, 1, 1, 1, 1, 4)
    with pytest.raises(ValueError):
        coeff_mixed(0, 1, 3)


@pytest.mark.parametrize("n", range(2, 9))
def test_coefficients_exhaustive(n):
    assert check_coefficients(n) == []


@given(st.integers(3, 9).flatmap(lambda n: st.tuples(st.just(n), st.sampled_from(discrete_triangle(n)), st.sampled_from(discrete_triangle(n)))))
def test_face_is_half_antisymmetrized_killing(args):
    n, t, t2 = args
    c = coeff_face(*t, *t2, n)
    assert Fraction(kf_RL(*t, *t2, n) - kf_RL(*t2, *t, n), 2) == c
    assert set(coeff_face_cases(*t, *t2)) == {c}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_omega_antisymmetric_integer(genus2, n):
    om = build_omega(genus2, n)
    size = len(om)
    assert all(om[i][j] == -om[j][i] for i in range(size) for j in range(size))
    assert all(isinstance(x, int) for row in om for x in row)


def test_faces_of_different_triangles_do_not_pair(genus2):
    ds = dots(genus2, 4)
    om = build_omega(genus2, 4)
    for i, d in enumerate(ds):
        for j, d2 in enumerate(ds):
            if isinstance(d, FaceDot) and isinstance(d2, FaceDot) and d.triangle != d2.triangle:
                assert om[i][j] == 0


def test_restricted_form_shapes(genus2):
    assert restricted_form(build_omega(genus2, 2), tuple(() for _ in range(18))) == ()
    with pytest.raises(la.DimensionError):
        restricted_form(build_omega(genus2, 2), ((1,),))


@pytest.mark.parametrize("n, report", [(2, "D=18 relations=12 kernel=6 omega_rank=6"), (3, "D=40 relations=24 kernel=16 omega_rank=16")])
def test_rank_report(genus2, n, report):
    assert str(rank_check(genus2, n)) == report


def test_n3_corollary(genus2):
    assert n3_corollary_check(genus2)
