import random
from fractions import Fraction

import pytest

from hitchin_fg import linalg as la
from hitchin_fg.flags import (
    DegenerateFlagsError,
    Flag,
    discrete_triangle,
    double_ratio,
    is_max_span,
    is_transverse,
    random_max_span_triple,
    rational_normal_curve_flag,
    slithering_elementary,
    standard_positive_triple,
    triple_ratio,
    wedge_det,
)


def test_wedge_det_example():
    assert wedge_det([(1, 0, 0), (1, 1, 1), (0, 1, 2)]) == 1


def test_standard_triple_ratio_n3():
    assert triple_ratio(*standard_positive_triple(3), 1, 1, 1) == 1


def test_standard_triple_is_positive():
    for n in (3, 4, 5):
        e, f, g = standard_positive_triple(n)
        assert all(triple_ratio(e, f, g, *t) > 0 for t in discrete_triangle(n))


def test_discrete_triangle_size():
    for n in range(2, 8):
        assert len(discrete_triangle(n)) == (n - 1) * (n - 2) // 2


def test_slithering_n2_example():
    e = Flag(((1, 0), (0, 1)))
    f = Flag(((0, 1), (1, 0)))
    f2 = Flag(((1, 1), (1, 0)))
    m = slithering_elementary("first", e, f, f2)
    assert m == la.mat([[1, -1], [0, 1]])
    assert f2.moved_by(m).same_as(f)
    assert e.moved_by(m).same_as(e)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_slithering_of_equal_flags_is_identity(n):
    e, f, _ = random_max_span_triple(random.Random(n), n)
    assert slithering_elementary("first", e, f, f) == la.identity(n)
    assert slithering_elementary("second", e, f, e) == la.identity(n)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_slithering_is_unipotent(n):
    e, f, g = random_max_span_triple(random.Random(10 + n), n)
    m = slithering_elementary("first", e, f, g)
    assert la.char_poly(m) == la.char_poly(la.identity(n))
    assert g.moved_by(m).same_as(f)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_double_ratio_with_repeated_flag(n):
    e, f, g = random_max_span_triple(random.Random(20 + n), n)
    for a in range(1, n):
        assert double_ratio(e, f, g, g, a, n - a) == -1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_double_ratio_symmetries(n):
    rng = random.Random(30 + n)
    e, f, g = random_max_span_triple(rng, n)
    h = rational_normal_curve_flag(Fraction(7, 3), n).moved_by(la.identity(n))
    try:
        values = {a: double_ratio(e, f, g, h, a, n - a) for a in range(1, n)}
    except DegenerateFlagsError:
        pytest.skip("degenerate sample")
    for a in range(1, n):
        assert double_ratio(f, e, h, g, n - a, a) == values[a]
        assert double_ratio(e, f, h, g, a, n - a) == 1 / values[a]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_triple_ratio_rotation(n):
    e, f, g = random_max_span_triple(random.Random(40 + n), n)
    for a, b, c in discrete_triangle(n):
        assert triple_ratio(e, f, g, a, b, c) == triple_ratio(f, g, e, b, c, a)


def test_triple_ratio_rejects_non_max_span():
    e = rational_normal_curve_flag(0, 3)
    with pytest.raises(DegenerateFlagsError):
        triple_ratio(e, e, rational_normal_curve_flag(1, 3), 1, 1, 1)


def test_triple_ratio_projective_invariance():
    rng = random.Random(5)
    e, f, g = random_max_span_triple(rng, 4)
    m = la.mat([[2, 1, 0, 0], [0, 1, 3, 0], [1, 0, 1, 0], [0, 0, 1, 5]])
    for t in discrete_triangle(4):
        assert triple_ratio(e, f, g, *t) == triple_ratio(e.moved_by(m), f.moved_by(m), g.moved_by(m), *t)


def test_transversality():
    assert is_transverse(rational_normal_curve_flag(0, 4), rational_normal_curve_flag(None, 4))
    e = rational_normal_curve_flag(0, 3)
    assert not is_transverse(e, e)
    assert is_max_span(*standard_positive_triple(4))
