"""Command-line front end.

Exit codes: 0 on success, 2 when a check or validation fails, 1 on usage or
parse errors.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .checks import selfcheck
from .flags import discrete_triangle
from .invariants import (
    ConfigError,
    generate_positive_config,
    quasi_additivity_terms,
    shear_adjacent,
    shear_separated,
    shear_separated_from_far_side,
    triangle_invariant,
)
from .killing import kf_RL, kf_SF_L, kf_SG_L, kf_SG_SF
from .symplectic import build_omega, rank_check
from .traintrack import (
    TrackSyntaxError,
    TrackValidationError,
    describe_dot,
    dot_count,
    dots,
    format_track,
    parse_track,
    validate,
)
from .zipper import KINDS, MoveError, MoveSpec, apply_move, eligible_sites, invariance_check

OK, CHECK_FAILED, USAGE = 0, 2, 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _row(values) -> str:
    return " ".join(fmt(v) for v in values)


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror)) from None
    return parse_track(text)


def cmd_validate(args, out) -> int:
    out.write("%s\n" % validate(_load(args.track)))
    return OK


def cmd_omega(args, out) -> int:
    track = _load(args.track)
    validate(track)
    if args.legend:
        for i, d in enumerate(dots(track, args.n)):
            out.write("# %d %s\n" % (i, describe_dot(d)))
    for row in build_omega(track, args.n):
        out.write(_row(row) + "\n")
    return OK


def cmd_rank(args, out) -> int:
    track = _load(args.track)
    report = validate(track)
    r = rank_check(track, args.n)
    out.write("%s\n" % r)
    expected = -report.chi * (args.n ** 2 - 1)
    good = r.D == dot_count(report.chi, args.n) and r.kernel_dim == expected and r.omega_restricted_rank == expected
    return OK if good else CHECK_FAILED


def cmd_zipper(args, out) -> int:
    track = _load(args.track)
    new_track, m = apply_move(track, MoveSpec(args.move, args.at), args.n)
    text = format_track(new_track)
    matrix = "".join(_row(r) + "\n" for r in m)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    if args.matrix:
        with open(args.matrix, "w", encoding="utf-8") as fh:
            fh.write(matrix)
    else:
        out.write("# substitution n=%d rows=%d cols=%d\n" % (args.n, len(m), len(m[0]) if m else 0))
        out.write(matrix)
    return OK


def cmd_zipper_verify(args, out) -> int:
    track = _load(args.track)
    validate(track)
    status = OK
    for kind in KINDS:
        for spec in eligible_sites(track, kind):
            try:
                ok = invariance_check(track, spec, args.n)
            except MoveError as exc:
                out.write("%s %s error %s\n" % (kind, spec.branch, exc))
                status = CHECK_FAILED
                continue
            out.write("%s %s %s\n" % (kind, spec.branch, "ok" if ok else "FAIL"))
            if not ok:
                status = CHECK_FAILED
    return status


def cmd_killing_table(args, out) -> int:
    n = args.n
    theta = discrete_triangle(n)
    ps = [(a, n - a) for a in range(1, n)]
    out.write("K(R_abc, L_a'b'c')\n")
    for t in theta:
        for t2 in theta:
            out.write("%d %d %d | %d %d %d : %s\n" % (t + t2 + (fmt(kf_RL(*t, *t2, n)),)))
    out.write("K(S_EG_ab, S_EF_a'b')\n")
    for p in ps:
        for p2 in ps:
            out.write("%d %d | %d %d : %s\n" % (p + p2 + (fmt(kf_SG_SF(*p, *p2, n)),)))
    for name, fn in (("K(S_EG_ab, L_a'b'c')", kf_SG_L), ("K(S_EF_ab, L_a'b'c')", kf_SF_L)):
        out.write(name + "\n")
        for p in ps:
            for t2 in theta:
                out.write("%d %d | %d %d %d : %s\n" % (p + t2 + (fmt(fn(*p, *t2, n)),)))
    return OK


def cmd_invariants(args, out) -> int:
    config = generate_positive_config(args.n, args.seed, args.shape)
    n = args.n
    lab = config.label
    for t in config.triangles:
        for v in t:
            for abc in discrete_triangle(n):
                out.write("tau %s at %s %d %d %d = %s\n" % ("".join(lab(i) for i in t), lab(v), *abc,
                                                            fmt(triangle_invariant(config, t, v, *abc))))
    for i, j in config.diagonals():
        for a in range(1, n):
            out.write("sigma %s->%s a=%d = %s\n" % (lab(i), lab(j), a, fmt(shear_adjacent(config, (i, j), a))))
    status = OK
    if len(config.triangles) >= 3:
        t, mid, t2 = config.triangles[0], config.triangles[1], config.triangles[-1]
        for first, last in ((t, t2), (t2, t)):
            for a in range(1, n):
                names = "".join(lab(i) for i in first), "".join(lab(i) for i in last)
                lhs, rhs, side = quasi_additivity_terms(config, first, mid, last, a)
                far = shear_separated_from_far_side(config, first, last, a)
                out.write("sigma %s|%s a=%d = %s\n" % (names[0], names[1], a, fmt(shear_separated(config, first, last, a))))
                out.write("residual quasi-additivity (%s) a=%d: %s\n" % (side, a, fmt(lhs - rhs)))
                out.write("residual two evaluations a=%d: %s\n" % (a, fmt(lhs - far)))
                if lhs != rhs or lhs != far:
                    status = CHECK_FAILED
    return status


def cmd_selfcheck(args, out) -> int:
    status = OK
    for name, failures in selfcheck(args.n, args.trials, args.seed):
        out.write("%s %s\n" % ("PASS" if not failures else "FAIL", name))
        for f in failures[:10]:
            out.write("  %s\n" % f)
        if failures:
            status = CHECK_FAILED
    return status


def _positive_int(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError("not an integer: %r" % text) from None
        if value < minimum:
            raise argparse.ArgumentTypeError("must be at least %d" % minimum)
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hitchin-fg", description="Exact symplectic form in Fock-Goncharov coordinates.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    dim = _positive_int(2)

    s = sub.add_parser("validate", help="validate a train-track file")
    s.add_argument("track")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("omega", help="print the symplectic matrix in the dot basis")
    s.add_argument("track")
    s.add_argument("-n", type=dim, required=True)
    s.add_argument("--legend", action="store_true", help="prefix one '# index kind ...' line per dot")
    s.set_defaults(func=cmd_omega)

    s = sub.add_parser("rank", help="relation and restricted form ranks")
    s.add_argument("track")
    s.add_argument("-n", type=dim, required=True)
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("zipper", help="apply one zipper move")
    s.add_argument("track")
    s.add_argument("--move", choices=KINDS, required=True)
    s.add_argument("--at", required=True, help="the middle branch of the move")
    s.add_argument("-n", type=dim, default=3, help="size used for the substitution matrix")
    s.add_argument("--output", help="write the new track here instead of standard output")
    s.add_argument("--matrix", help="write the substitution matrix here instead of standard output")
    s.set_defaults(func=cmd_zipper)

    s = sub.add_parser("zipper-verify", help="check invariance at every eligible site")
    s.add_argument("track")
    s.add_argument("-n", type=dim, required=True)
    s.set_defaults(func=cmd_zipper_verify)

    s = sub.add_parser("killing-table", help="print the closed-form Killing pairings")
    s.add_argument("-n", type=dim, required=True)
    s.set_defaults(func=cmd_killing_table)

    s = sub.add_parser("invariants", help="invariants of a generated positive configuration")
    s.add_argument("--shape", choices=("pentagon", "quad"), default="pentagon")
    s.add_argument("-n", type=dim, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("selfcheck", help="run the property suites")
    s.add_argument("-n", type=dim, required=True)
    s.add_argument("--trials", type=_positive_int(1), default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selfcheck)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        return args.func(args, out)
    except UsageError as exc:
        err.write(parser.format_usage())
        err.write("error: %s\n" % exc)
        return USAGE
    except TrackSyntaxError as exc:
        err.write("syntax error: %s\n" % exc)
        return USAGE
    except (TrackValidationError, MoveError, ConfigError) as exc:
        err.write("check failed: %s\n" % exc)
        return CHECK_FAILED


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
