from fractions import Fraction

import pytest

from hitchin_fg.checks import check_quasi_additivity
from hitchin_fg.flags import discrete_triangle, rational_normal_curve_flag
from hitchin_fg.invariants import (
    ConfigError,
    PolygonConfig,
    erupt,
    generate_positive_config,
    is_positive,
    pivot,
    quasi_additivity_terms,
    shear_adjacent,
    shear_along,
    shear_separated,
    shear_separated_from_far_side,
    triangle_invariant,
)


def curve_config(n, params):
    return PolygonConfig(tuple(rational_normal_curve_flag(Fraction(t), n) for t in params), ((0, 1, 2), (0, 2, 3), (0, 3, 4)))


@pytest.mark.parametrize("n", [2, 3])
def test_generated_configs_positive(n):
    for seed in range(5):
        config = generate_positive_config(n, seed)
        assert is_positive(config)
        assert config.size == 5


def test_generation_is_deterministic():
    a = generate_positive_config(3, 11)
    b = generate_positive_config(3, 11)
    assert a == b


def test_quad_shape():
    config = generate_positive_config(3, 1, "quad")
    assert config.size == 4 and config.diagonals() == [(0, 2)]


def test_bad_shape():
    with pytest.raises(ValueError):
        generate_positive_config(3, 0, "hexagon")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_quasi_additivity(n):
    for seed in range(4):
        assert check_quasi_additivity(generate_positive_config(n, seed)) == []


def test_both_pivot_sides_occur():
    config = generate_positive_config(3, 0)
    t, mid, t2 = config.triangles
    sides = {pivot(config, t, mid, t2)[1], pivot(config, t2, mid, t)[1]}
    assert sides == {"left", "right"}
    for first, last in ((t, t2), (t2, t)):
        lhs, rhs, _ = quasi_additivity_terms(config, first, mid, last, 1)
        assert lhs == rhs


def test_separated_shear_of_neighbours_is_reciprocal_of_adjacent():
    config = generate_positive_config(3, 0)
    t, t2 = config.triangles[0], config.triangles[1]
    for a in (1, 2):
        # the diagonal (0, 2) oriented with t on its left
        assert shear_separated(config, t, t2, a) * shear_adjacent(config, (2, 0), a) == 1
        assert shear_separated_from_far_side(config, t, t2, a) == shear_separated(config, t, t2, a)


def test_eruption_scales_one_invariant():
    config = curve_config(3, [0, 1, 2, 5, 9])
    tri = config.triangles[1]
    moved = erupt(config, tri, (1, 1, 1), Fraction(5, 2))
    before = triangle_invariant(config, tri, tri[0], 1, 1, 1)
    assert triangle_invariant(moved, tri, tri[0], 1, 1, 1) == Fraction(5, 2) * before
    for other in (config.triangles[0], config.triangles[2]):
        assert triangle_invariant(moved, other, other[0], 1, 1, 1) == triangle_invariant(config, other, other[0], 1, 1, 1)


def test_shear_along_scales_one_shear():
    config = curve_config(4, [0, 1, 2, 5, 9])
    for i, j in config.diagonals():
        for a in range(1, 4):
            moved = shear_along(config, (i, j), a, Fraction(3))
            for d in config.diagonals():
                for b in range(1, 4):
                    ratio = shear_adjacent(moved, d[::-1], b) / shear_adjacent(config, d[::-1], b)
                    assert ratio == (3 if (d, b) == ((i, j), a) else 1)
            for t in config.triangles:
                for abc in discrete_triangle(4):
                    assert triangle_invariant(moved, t, t[0], *abc) == triangle_invariant(config, t, t[0], *abc)


def test_rotating_the_reading_vertex():
    config = curve_config(4, [0, 1, 2, 5, 9])
    t = config.triangles[0]
    for a, b, c in discrete_triangle(4):
        assert triangle_invariant(config, t, t[0], a, b, c) == triangle_invariant(config, t, t[1], b, c, a)


def test_errors():
    config = curve_config(3, [0, 1, 2, 5, 9])
    with pytest.raises(ConfigError):
        triangle_invariant(config, (1, 2, 3), 1, 1, 1, 1)
    with pytest.raises(ConfigError):
        shear_adjacent(config, (0, 1), 1)
    with pytest.raises(ConfigError):
        pivot(config, config.triangles[0], config.triangles[2], config.triangles[1])
