"""One check per acceptance criterion, each printing a PASS/FAIL line with its runtime."""
import random
import time

import pytest

from hitchin_fg import linalg as la
from hitchin_fg.checks import (
    check_coefficients,
    check_flow_axioms,
    check_killing_tables,
    check_quasi_additivity,
)
from hitchin_fg.flags import (
    discrete_triangle,
    double_ratio,
    random_max_span_triple,
    slithering_elementary,
)
from hitchin_fg.flows import eruption_left, eruption_right, shear
from hitchin_fg.invariants import generate_positive_config, pivot
from hitchin_fg.symplectic import coeff_face, n3_corollary_check, rank_check
from hitchin_fg.traintrack import dot_count, validate
from hitchin_fg.zipper import KINDS, eligible_sites, invariance_check


def report(number, title, failures, elapsed, limit):
    ok = not failures and elapsed < limit
    print("\nACCEPTANCE %d %s: %s (%.1f s, limit %d s)%s" % (
        number, title, "PASS" if ok else "FAIL", elapsed, limit,
        "" if not failures else " first failures: %s" % failures[:3]))
    assert not failures
    assert elapsed < limit


def test_1_killing_tables():
    start = time.time()
    bad = []
    for n in range(2, 7):
        for k in range(100):
            e, f, g = random_max_span_triple(random.Random("accept-kill-%d-%d" % (n, k)), n)
            bad += ["n=%d %s" % (n, b) for b in check_killing_tables(e, f, g)]
    report(1, "Killing tables", bad, time.time() - start, 60)


def test_2_coefficients():
    start = time.time()
    bad = []
    for n in range(2, 9):
        bad += ["n=%d %s" % (n, b) for b in check_coefficients(n)]
    report(2, "coefficient consistency", bad, time.time() - start, 10)


def test_3_flow_axioms():
    start = time.time()
    bad = []
    for n in range(2, 6):
        for k in range(50):
            rng = random.Random("accept-flow-%d-%d" % (n, k))
            e, f, g = random_max_span_triple(rng, n)
            bad += ["n=%d %s" % (n, b) for b in check_flow_axioms(e, f, g, rng)]
    report(3, "flow axioms", bad, time.time() - start, 60)


def test_4_counts_and_ranks(genus2):
    start = time.time()
    bad = []
    chi = validate(genus2).chi
    expected = {2: (18, 12, 6, 6), 3: (40, 24, 16, 16)}
    for n in (2, 3, 4):
        r = rank_check(genus2, n)
        if r.D != dot_count(chi, n) or r.kernel_dim != -chi * (n * n - 1) or r.omega_restricted_rank != r.kernel_dim:
            bad.append("n=%d %s" % (n, r))
        if n in expected and (r.D, r.relation_rank, r.kernel_dim, r.omega_restricted_rank) != expected[n]:
            bad.append("n=%d %s" % (n, r))
    report(4, "counting and rank", bad, time.time() - start, 30)


def test_5_zipper_invariance(genus2):
    start = time.time()
    bad = []
    count = 0
    for n in (2, 3, 4):
        for kind in KINDS:
            sites = eligible_sites(genus2, kind)
            if not sites:
                bad.append("no eligible site for %s" % kind)
            for spec in sites:
                count += 1
                if not invariance_check(genus2, spec, n):
                    bad.append("n=%d %s %s" % (n, kind, spec.branch))
    assert count == 36
    report(5, "zipper invariance", bad, time.time() - start, 120)


def test_6_n3_corollary(genus2):
    start = time.time()
    bad = [] if n3_corollary_check(genus2) else ["mismatch"]
    report(6, "n=3 corollary", bad, time.time() - start, 5)


def test_7_quasi_additivity():
    start = time.time()
    bad = []
    sides = set()
    for n in (2, 3):
        for seed in range(50):
            config = generate_positive_config(n, seed)
            t, mid, t2 = config.triangles
            sides.add(pivot(config, t, mid, t2)[1])
            sides.add(pivot(config, t2, mid, t)[1])
            bad += ["n=%d seed=%d %s" % (n, seed, b) for b in check_quasi_additivity(config)]
    if sides != {"left", "right"}:
        bad.append("pivot sides covered: %s" % sorted(sides))
    report(7, "quasi-additivity", bad, time.time() - start, 60)


def test_8_trivial_pins():
    start = time.time()
    bad = []
    for n in range(2, 6):
        e, f, g = random_max_span_triple(random.Random("accept-pin-%d" % n), n)
        ident = la.identity(n)
        for a in range(1, n):
            if double_ratio(e, f, g, g, a, n - a) != -1:
                bad.append("double ratio n=%d a=%d" % (n, a))
            if shear(e, f, a, n - a, 1) != ident:
                bad.append("shear u=1 n=%d" % n)
        for t in discrete_triangle(n):
            if coeff_face(*t, *t, n) != 0:
                bad.append("face diagonal %s" % (t,))
            if eruption_left(e, f, g, *t, 1) != ident or eruption_right(e, f, g, *t, 1) != ident:
                bad.append("eruption u=1 %s" % (t,))
        if slithering_elementary("first", e, f, f) != ident:
            bad.append("slithering n=%d" % n)
    report(8, "trivial pins", bad, time.time() - start, 1)
