"""Command-line interface.

Subcommands: gen (emit a semigroroup as JSON), verify (run suites over a
file or the default corpus), rep (print representation matrices or run
the membership checks), norm (norms of a coefficient function),
quotient-check (quotient-norm comparison), witness-search (associativity
scan for the order-relaxed product).  Exit codes: 0 pass, 1 verification
failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import cstar
from .algebra import order_dot_scan
from .corpus import default_corpus
from .errors import (
    NotAssociative,
    NotInverse,
    ParseError,
    RestalgError,
    SizeLimit,
    StarMismatch,
    VerificationFailure,
)
from .families import (
    adjoin_identity,
    gen_brandt,
    gen_chain_semilattice,
    gen_group,
    gen_symmetric_inverse_monoid,
)
from .io_json import canonical_dumps, load_function, load_semigroup, semigroup_to_dict
from .reps import (
    left_regular,
    representation_report,
    restricted_left_regular,
    restricted_right_regular,
)
from .restricted import build_restricted_semigroup
from .semigroups import MAX_ORDER
from .verify import Tolerances, run_suites

EXIT_PASS = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2


def _add_common(p):
    p.add_argument("--seed", type=int, default=7, help="random seed (default 7)")
    p.add_argument("--trials", type=int, default=100, help="random trials (default 100)")
    p.add_argument(
        "--tol",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="override a tolerance (entrywise, norm, identity, cstar, "
        "minimized, pivot, contraction)",
    )
    p.add_argument("--max-order", type=int, default=MAX_ORDER)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="as_json", action="store_true")
    fmt.add_argument("--text", dest="as_json", action="store_false")
    p.set_defaults(as_json=False)


def _tolerances(args):
    pairs = {}
    for item in args.tol:
        if "=" not in item:
            raise ParseError(f"--tol expects NAME=VALUE, got {item!r}")
        key, value = item.split("=", 1)
        pairs[key.strip()] = value
    try:
        return Tolerances().override(pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _gen_family(args):
    fam = args.family
    if fam == "trivial":
        S = gen_group("cyclic", 1)
    elif fam == "cyclic":
        S = gen_group("cyclic", args.n, max_order=args.max_order)
    elif fam == "symmetric":
        S = gen_group("symmetric", args.n, max_order=args.max_order)
    elif fam == "chain":
        S = gen_chain_semilattice(args.n, max_order=args.max_order)
    elif fam == "symmetric-inverse":
        S = gen_symmetric_inverse_monoid(args.n)
    elif fam == "brandt":
        group = gen_group("cyclic", args.group_n, max_order=args.max_order)
        S = gen_brandt(group.mul, args.n, max_order=args.max_order)
    else:
        raise ParseError(f"unknown family {fam!r}")
    if args.with_identity:
        S = adjoin_identity(S, max_order=args.max_order)
    return S


def cmd_gen(args):
    S = _gen_family(args)
    if args.restricted:
        S = build_restricted_semigroup(S).sr
    payload = canonical_dumps(semigroup_to_dict(S))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_PASS


def _members_for(args):
    if args.semigroup:
        S = load_semigroup(args.semigroup, max_order=args.max_order)
        return [(args.semigroup, S)]
    return default_corpus(include_restricted=not args.no_restricted)


def cmd_verify(args):
    tol = _tolerances(args)
    suites = ["axioms", "algebra", "reps", "cstar"] if args.suite == "all" else [args.suite]
    members = _members_for(args)
    reports = run_suites(members, suites, seed=args.seed, trials=args.trials, tol=tol)
    ok = all(r.passed for r in reports)
    if args.as_json:
        print(json.dumps([r.as_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.format_text())
        total = sum(len(r.checks) for r in reports)
        failed = sum(1 for r in reports for c in r.checks if not c.passed)
        print(f"== {total - failed}/{total} checks passed over {len(members)} semigroups")
    return EXIT_PASS if ok else EXIT_VERIFICATION


def cmd_rep(args):
    S = (
        load_semigroup(args.semigroup, max_order=args.max_order)
        if args.semigroup
        else _gen_family(args)
    )
    builders = {
        "lambda_r": lambda: restricted_left_regular(S),
        "rho_r": lambda: restricted_right_regular(S),
        "lambda": lambda: left_regular(S),
        "Lambda": lambda: left_regular(build_restricted_semigroup(S).sr),
    }
    if args.check:
        bad = 0
        for name, build in builders.items():
            rep = build()
            report = representation_report(rep)
            status = "PASS" if report.ok else "FAIL"
            print(f"[{status}] {name} membership ({rep.kind} law)")
            for v in report.violations:
                print(f"    {v.code}: {v.witness}")
                bad += 1
        return EXIT_PASS if bad == 0 else EXIT_VERIFICATION
    rep = builders[args.which]()
    x = args.element
    if not 0 <= x < rep.base.n:
        raise ParseError(f"element {x} out of range for order {rep.base.n}")
    M = rep.mat(x)
    if args.as_json:
        print(
            json.dumps(
                [[[v.real, v.imag] for v in row] for row in M.tolist()],
                indent=None,
            )
        )
    else:
        print(f"{args.which}({rep.base.label(x)}) =")
        with np.printoptions(precision=3, suppress=True, linewidth=120):
            print(np.real_if_close(M))
    return EXIT_PASS


def cmd_norm(args):
    f = load_function(args.function, max_order=args.max_order)
    if args.cstar:
        zero = f.base.zero if f.base.zero is not None and f.base.n >= 2 else None
        report = cstar.norm_report(
            f, zero_index=zero, trials=min(args.trials, 5), seed=args.seed
        )
        payload = report.as_dict()
        payload["unrestricted_reduced"] = cstar.unrestricted_reduced_norm(f)
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_PASS
    p = {"1": 1, "2": 2, "inf": "inf"}[args.p]
    value = f.norm(p)
    if args.as_json:
        print(json.dumps({"p": args.p, "norm": value}))
    else:
        print(value)
    return EXIT_PASS


def cmd_quotient_check(args):
    members = _members_for(args)
    worst = None
    for label, S in members:
        report = cstar.quotient_match_report(
            S, trials=args.trials, seed=args.seed, label=label
        )
        status = "PASS" if report.ok else "FAIL"
        print(
            f"[{status}] {label}: max |quotient - reduced| = "
            f"{report.max_deviation:.3e}, scalar-minimization deviation = "
            f"{report.minimized_deviation:.3e}"
        )
        if not report.ok and worst is None:
            worst = report
    return EXIT_PASS if worst is None else EXIT_VERIFICATION


def cmd_witness_search(args):
    members = _members_for(args)
    results = order_dot_scan(members)
    found = False
    for record in results:
        if record["witness"] is None:
            print(f"[pass] {record['label']}: exhaustive scan found no failing triple")
            continue
        found = True
        x, y, z = record["witness"]
        label = record["label"]
        S = dict(members)[label]
        names = tuple(S.label(v) for v in (x, y, z))
        print(f"[witness] {label}: delta triple (x, y, z) = {names}")
        with np.printoptions(precision=3, suppress=True, linewidth=120):
            print(f"    (dx .' dy) .' dz = {np.real_if_close(record['lhs'])}")
            print(f"    dx .' (dy .' dz) = {np.real_if_close(record['rhs'])}")
        if args.first:
            break
    if not found:
        print("no corpus member yields a failing triple")
    return EXIT_PASS


def build_parser():
    parser = argparse.ArgumentParser(
        prog="restalg",
        description="Finite inverse semigroups, their restricted convolution "
        "algebras, regular representations, and C*-norm checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a semigroup as JSON")
    p.add_argument(
        "--family",
        required=True,
        choices=["trivial", "cyclic", "symmetric", "chain", "symmetric-inverse", "brandt"],
    )
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--group-n", type=int, default=1, help="group order for brandt")
    p.add_argument("--with-identity", action="store_true", help="adjoin an identity")
    p.add_argument("--restricted", action="store_true", help="emit the zero-adjoined semigroup")
    p.add_argument("--out", default=None)
    _add_common(p)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("semigroup", nargs="?", default=None, help="semigroup JSON file")
    p.add_argument("--corpus", default="default", help="use the default corpus")
    p.add_argument(
        "--no-restricted",
        action="store_true",
        help="skip the zero-adjoined variants of the corpus members",
    )
    p.add_argument(
        "--suite",
        default="all",
        choices=["axioms", "algebra", "reps", "cstar", "all"],
    )
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("rep", help="print representation matrices / run membership checks")
    p.add_argument("semigroup", nargs="?", default=None)
    p.add_argument("--family", default="symmetric-inverse")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--group-n", type=int, default=1)
    p.add_argument("--with-identity", action="store_true")
    p.add_argument(
        "--which",
        default="lambda_r",
        choices=["lambda_r", "rho_r", "lambda", "Lambda"],
    )
    p.add_argument("--element", type=int, default=0)
    p.add_argument("--check", action="store_true", help="run the membership suite")
    _add_common(p)
    p.set_defaults(fn=cmd_rep)

    p = sub.add_parser("norm", help="norms of a coefficient function")
    p.add_argument("function", help="function JSON file")
    p.add_argument("--p", default="1", choices=["1", "2", "inf"])
    p.add_argument("--cstar", action="store_true", help="emit the full norm report")
    _add_common(p)
    p.set_defaults(fn=cmd_norm)

    p = sub.add_parser("quotient-check", help="quotient-norm comparison")
    p.add_argument("semigroup", nargs="?", default=None)
    p.add_argument("--corpus", default="default")
    p.add_argument("--no-restricted", action="store_true", default=True, help=argparse.SUPPRESS)
    _add_common(p)
    p.set_defaults(fn=cmd_quotient_check)

    p = sub.add_parser("witness-search", help="associativity scan for the order-relaxed product")
    p.add_argument("semigroup", nargs="?", default=None)
    p.add_argument("--corpus", default="default")
    p.add_argument("--no-restricted", action="store_true")
    p.add_argument("--first", action="store_true", help="stop at the first witness")
    _add_common(p)
    p.set_defaults(fn=cmd_witness_search)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NotAssociative, NotInverse, StarMismatch, VerificationFailure) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (SizeLimit, RestalgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
