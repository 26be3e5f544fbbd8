"""Command line front end.

All machine-readable output is JSON on stdout (one document per run, keys
sorted); human diagnostics and timings go to stderr.  Exit codes: 0 on
success, 1 when a verification suite reports a failure, 2 for usage errors
including exceeded size bounds (pass --force to lift them).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import brackets, perms, pop, series, verification
from .brackets import BracketVector
from .paths import BoundExceeded, NuContext, east_staircase, enumerate_tam

__all__ = ["main"]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _context_from_args(args) -> NuContext:
    if args.nu is not None:
        return NuContext.from_text(args.nu)
    return NuContext.from_path(east_staircase(args.n))


def _cmd_enum(args) -> int:
    ctx = _context_from_args(args)
    for mu in enumerate_tam(ctx, force=args.force):
        vec = brackets.path_to_vector(mu, ctx)
        _emit({"nu": ctx.nu.steps, "path": mu.steps, "vector": list(vec.entries)})
    return 0


def _cmd_pop(args) -> int:
    if args.perm is not None:
        p = perms.parse_permutation(args.perm)
        result = perms.pop_tamari_perm(p)
        _emit({"perm": list(p.word), "pop": list(result.word)})
        return 0
    ctx = _context_from_args(args)
    entries = tuple(int(x) for x in args.vector.split(","))
    if not brackets.is_valid(entries, ctx):
        print("error: not a valid vector for this base path", file=sys.stderr)
        return 2
    traj = pop.trajectory(BracketVector(entries, ctx))
    if args.trace:
        for state in traj.states:
            print("state: " + ",".join(map(str, state.entries)), file=sys.stderr)
    _emit(
        {
            "nu": ctx.nu.steps,
            "trajectory": [list(s.entries) for s in traj.states],
            "sortability_time": traj.sortability_time,
        }
    )
    return 0


def _cmd_sortable(args) -> int:
    count = pop.count_t_sortable(args.n, args.t, force=args.force)
    h = series.h_series(args.t, args.n)
    _emit(
        {
            "n": args.n,
            "t": args.t,
            "count": count,
            "series_coefficient": str(h[args.n]),
            "agree": count == h[args.n],
        }
    )
    return 0


def _cmd_series(args) -> int:
    h = series.h_series(args.t, args.terms)
    _emit([str(h[n]) for n in range(args.terms + 1)])
    return 0


def _cmd_image(args) -> int:
    image = pop.pop_image(args.n, force=args.force)
    out = {"n": args.n, "size": len(image), "motzkin": series.motzkin(args.n - 1)}
    if args.qpoly:
        poly = pop.pop_polynomial(args.n, force=args.force)
        formula = {}
        m = args.n - 1
        for k in range(0, m // 2 + 1):
            val = series.a055151(m, k)
            if val:
                formula[str(m - k)] = val
        out["qpoly"] = {str(k): v for k, v in sorted(poly.coeffs.items())}
        out["qpoly_formula"] = formula
    _emit(out)
    return 0


def _cmd_verify(args) -> int:
    opts = verification.VerifyOptions(max_n=args.max_n, max_t=args.max_t, seed=args.seed)
    try:
        report = verification.run_suite(args.suite, opts, log=sys.stderr)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    _emit(report.to_json_dict())
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tamaripop",
        description="Pop-stack sorting on Tamari lattices of lattice paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_base_path(p, required: bool) -> None:
        group = p.add_mutually_exclusive_group(required=required)
        group.add_argument("--n", type=int, help="use the n-element staircase base path")
        group.add_argument("--nu", type=str, help="explicit base path over letters N and E")

    p = sub.add_parser("enum", help="list the lattice elements over a base path")
    add_base_path(p, required=True)
    p.add_argument("--force", action="store_true", help="lift the size bound")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("pop", help="run the pop operator to the bottom element")
    add_base_path(p, required=False)
    p.add_argument("--vector", type=str, help="comma separated vector entries")
    p.add_argument("--perm", type=str, help="apply the permutation form instead")
    p.add_argument("--trace", action="store_true", help="print each state to stderr")
    p.set_defaults(func=_cmd_pop)

    p = sub.add_parser("sortable", help="count elements that sort within t steps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--force", action="store_true", help="lift the size bound")
    p.set_defaults(func=_cmd_sortable)

    p = sub.add_parser("series", help="print counting series coefficients")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--terms", type=int, default=20)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("image", help="describe the image of the pop operator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--qpoly", action="store_true", help="include the up-cover histogram")
    p.add_argument("--force", action="store_true", help="lift the size bound")
    p.set_defaults(func=_cmd_image)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", type=str, default="all", help="|".join(verification.suite_names()))
    p.add_argument("--max-n", type=int, default=None, help="override size bounds")
    p.add_argument("--max-t", type=int, default=None, help="override step bounds")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "pop" and args.perm is None:
        if args.vector is None or (args.n is None and args.nu is None):
            parser.error("pop needs either --perm or both --vector and a base path")
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
