import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hitchin_fg import linalg as la
from hitchin_fg.checks import check_killing_tables
from hitchin_fg.flags import random_max_span_triple
from hitchin_fg.killing import kf_RL, kf_SG_L, kf_SG_SF, killing_form


def test_table_examples():
    assert kf_RL(1, 1, 1, 1, 1, 1, 3) == 2
    assert kf_RL(1, 2, 1, 2, 1, 1, 4) == 0
    assert kf_SG_SF(1, 2, 1, 2, 3) == 4
    assert kf_SG_L(2, 1, 1, 1, 1, 3) == -2


def test_killing_form_normalization():
    h = la.diagonal([Fraction(1, 2), Fraction(-1, 2)])
    assert killing_form(h, h) == 2


def test_killing_form_rejects_non_traceless():
    with pytest.raises(ValueError):
        killing_form(la.identity(2), la.identity(2))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=9, max_size=9), st.lists(st.integers(-5, 5), min_size=9, max_size=9))
def test_killing_form_symmetric(xs, ys):
    def traceless(v):
        m = [list(map(Fraction, v[i * 3:(i + 1) * 3])) for i in range(3)]
        m[2][2] = -m[0][0] - m[1][1]
        return la.mat(m)
    x, y = traceless(xs), traceless(ys)
    assert killing_form(x, y) == killing_form(y, x)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_tables_match_generators(n):
    for k in range(3):
        assert check_killing_tables(*random_max_span_triple(random.Random("kt-%d-%d" % (n, k)), n)) == []


def test_invalid_indices():
    with pytest.raises(ValueError):
        kf_RL(1, 1, 2, 1, 1, 1, 3)
    with pytest.raises(ValueError):
        kf_SG_SF(0, 3, 1, 2, 3)
