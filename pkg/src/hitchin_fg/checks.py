"""Property suites shared by the ``selfcheck`` command and the test suite.

Each check returns a list of failure descriptions; an empty list means pass.
"""
from __future__ import annotations

import random
from fractions import Fraction

from . import linalg as la
from .flags import (
    DegenerateFlagsError,
    discrete_triangle,
    double_ratio,
    random_flag,
    random_max_span_triple,
    triple_ratio,
)
from .flows import (
    eruption_left,
    eruption_right,
    gen_eruption_left,
    gen_eruption_right,
    gen_shear,
    shear,
    traceless_part,
)
from .invariants import generate_positive_config, quasi_additivity_terms, shear_separated_from_far_side
from .killing import kf_RL, kf_SF_L, kf_SG_L, kf_SG_SF, killing_form
from .symplectic import coeff_face, coeff_face_cases, coeff_mixed


def pairs(n: int) -> list:
    return [(a, n - a) for a in range(1, n)]


def check_killing_tables(e, f, g) -> list:
    n = e.dim
    bad = []
    theta = discrete_triangle(n)
    rs = {t: gen_eruption_right(e, f, g, *t) for t in theta}
    ls = {t: gen_eruption_left(e, f, g, *t) for t in theta}
    sg = {p: gen_shear(e, g, *p) for p in pairs(n)}
    sf = {p: gen_shear(e, f, *p) for p in pairs(n)}
    for t in theta:
        for t2 in theta:
            if killing_form(rs[t], ls[t2]) != kf_RL(*t, *t2, n):
                bad.append("RL %s %s" % (t, t2))
    for p in pairs(n):
        for p2 in pairs(n):
            if killing_form(sg[p], sf[p2]) != kf_SG_SF(*p, *p2, n):
                bad.append("SG_SF %s %s" % (p, p2))
        for t2 in theta:
            if killing_form(sg[p], ls[t2]) != kf_SG_L(*p, *t2, n):
                bad.append("SG_L %s %s" % (p, t2))
            if killing_form(sf[p], ls[t2]) != kf_SF_L(*p, *t2, n):
                bad.append("SF_L %s %s" % (p, t2))
    return bad


def check_coefficients(n: int) -> list:
    bad = []
    theta = discrete_triangle(n)
    for t in theta:
        for t2 in theta:
            c = coeff_face(*t, *t2, n)
            if set(coeff_face_cases(*t, *t2)) != {c}:
                bad.append("face cases %s %s" % (t, t2))
            if Fraction(kf_RL(*t, *t2, n) - kf_RL(*t2, *t, n), 2) != c:
                bad.append("face vs Killing %s %s" % (t, t2))
            if coeff_face(*t2, *t, n) != -c:
                bad.append("face antisymmetry %s %s" % (t, t2))
            r, r2 = (t[1], t[2], t[0]), (t2[1], t2[2], t2[0])
            if coeff_face(*r, *r2, n) != c:
                bad.append("face rotation %s %s" % (t, t2))
    for a in range(1, n):
        for a2 in range(1, n):
            c = coeff_mixed(a, a2, n)
            if 2 * c != kf_SG_SF(a, n - a, a2, n - a2, n):
                bad.append("mixed vs SG_SF %d %d" % (a, a2))
            for b2 in range(1, n - a2):
                if 2 * c != -kf_SG_L(a, n - a, a2, b2, n - a2 - b2, n):
                    bad.append("mixed vs SG_L %d %d %d" % (a, a2, b2))
    return bad


def _flags_equal_after(m, flag) -> bool:
    return flag.moved_by(m).same_as(flag)


def _fixes_line(m, flag) -> bool:
    v = flag.line()
    w = la.matvec(m, v)
    return la.rank(la.from_columns([v, w])) == 1


def _commute(x, y) -> bool:
    return la.matmul(x, y) == la.matmul(y, x)


def _laurent_derivative(flow, power: int):
    """Exact d/du at u = 1 of a flow of the form A + B u^power, power = +1 or -1.

    The form is confirmed at a third sample point before differentiating.
    """
    m1, m2, m3 = flow(1), flow(2), flow(3)
    scale2 = Fraction(2) ** power
    b = la.scale(1 / (scale2 - 1), la.sub(m2, m1))
    a = la.sub(m1, b)
    if la.add(a, la.scale(Fraction(3) ** power, b)) != m3:
        raise AssertionError("flow is not of the expected form in u")
    return la.scale(power, b)


def check_flow_axioms(e, f, g, rng: random.Random) -> list:
    n = e.dim
    bad = []
    theta = discrete_triangle(n)
    u = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    u2 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    base = {t: triple_ratio(e, f, g, *t) for t in theta}
    ident = la.identity(n)
    lefts, rights = {}, {}
    for t in theta:
        lm = eruption_left(e, f, g, *t, u)
        rm = eruption_right(e, f, g, *t, u)
        lefts[t], rights[t] = lm, rm
        if eruption_left(e, f, g, *t, 1) != ident or eruption_right(e, f, g, *t, 1) != ident:
            bad.append("u=1 eruption %s" % (t,))
        moved = g.moved_by(lm)
        for t2 in theta:
            want = base[t2] * (u if t2 == t else 1)
            if triple_ratio(e, f, moved, *t2) != want:
                bad.append("L one-ratio %s %s" % (t, t2))
        if not moved.same_as(g.moved_by(rm)):
            bad.append("L G = R G %s" % (t,))
        if not _flags_equal_after(lm, e):
            bad.append("L fixes E %s" % (t,))
        if not _flags_equal_after(rm, f):
            bad.append("R fixes F %s" % (t,))
        for fl in (e, f, g):
            if not (_fixes_line(lm, fl) and _fixes_line(rm, fl)):
                bad.append("eruption fixes lines %s" % (t,))
        for power, flow, gen in (
            (-1, lambda x, t=t: eruption_left(e, f, g, *t, x), gen_eruption_left(e, f, g, *t)),
            (1, lambda x, t=t: eruption_right(e, f, g, *t, x), gen_eruption_right(e, f, g, *t)),
        ):
            if traceless_part(_laurent_derivative(flow, power)) != gen or la.trace(gen) != 0:
                bad.append("generator %s" % (t,))
    # eruptions commute as flows: the second one is taken along the triple
    # produced by the first
    for flow, done in ((eruption_left, lefts), (eruption_right, rights)):
        second = {t: flow(e, f, g, *t, u2) for t in theta}
        for t in theta:
            for t2 in theta:
                if t2 <= t:
                    continue
                one = la.matmul(flow(e, f, g.moved_by(done[t]), *t2, u2), done[t])
                two = la.matmul(flow(e, f, g.moved_by(second[t2]), *t, u), second[t2])
                if not la.projectively_equal(one, two):
                    bad.append("eruption commutation %s %s %s" % (flow.__name__, t, t2))
    # shears along (E, F), measured against the line of G and a fourth flag H
    h = random_flag(rng, n)
    try:
        base2 = {p: double_ratio(e, f, g, h, *p) for p in pairs(n)}
    except DegenerateFlagsError:
        return bad
    for p in pairs(n):
        s = shear(e, f, *p, u)
        if shear(e, f, *p, 1) != ident:
            bad.append("u=1 shear %s" % (p,))
        if not (_flags_equal_after(s, e) and _flags_equal_after(s, f)):
            bad.append("shear fixes E, F %s" % (p,))
        for p2 in pairs(n):
            want = base2[p2] * (u if p2 == p else 1)
            if double_ratio(e, f, g, h.moved_by(s), *p2) != want:
                bad.append("shear one-ratio %s %s" % (p, p2))
            if not _commute(s, shear(e, f, *p2, u2)):
                bad.append("shear commutation %s %s" % (p, p2))
        deriv = _laurent_derivative(lambda x, p=p: shear(e, f, *p, x), 1)
        if traceless_part(deriv) != gen_shear(e, f, *p):
            bad.append("shear generator %s" % (p,))
    return bad


def check_rotation(e, f, g) -> list:
    return [
        "rotation %s" % (t,)
        for t in discrete_triangle(e.dim)
        if triple_ratio(e, f, g, *t) != triple_ratio(f, g, e, t[1], t[2], t[0])
    ]


def check_quasi_additivity(config) -> list:
    bad = []
    t, mid, t2 = config.triangles[0], config.triangles[1], config.triangles[-1]
    for a in range(1, config.n):
        for first, last in ((t, t2), (t2, t)):
            lhs, rhs, side = quasi_additivity_terms(config, first, mid, last, a)
            if lhs != rhs:
                bad.append("quasi-additivity %s a=%d" % (side, a))
            if shear_separated_from_far_side(config, first, last, a) != lhs:
                bad.append("two evaluations a=%d" % a)
    return bad


def selfcheck(n: int, trials: int, seed: int) -> list:
    """Run every property suite; returns (name, failures) pairs."""
    results = []
    suites = {"killing tables": [], "flow axioms": [], "triple ratio rotation": []}
    for k in range(trials):
        rng = random.Random("%d-%d-%d" % (seed, n, k))
        e, f, g = random_max_span_triple(rng, n)
        suites["killing tables"] += check_killing_tables(e, f, g)
        suites["triple ratio rotation"] += check_rotation(e, f, g)
        if k < max(1, trials // 10):
            suites["flow axioms"] += check_flow_axioms(e, f, g, rng)
    results += list(suites.items())
    results.append(("coefficient tables", check_coefficients(n)))
    qa = []
    for k in range(max(1, trials // 10)):
        qa += check_quasi_additivity(generate_positive_config(n, seed * 1000 + k, "pentagon"))
    results.append(("quasi-additivity", qa))
    return results
