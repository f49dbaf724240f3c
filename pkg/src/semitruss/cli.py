"""Command-line surface.

Subcommands: check, derive-lambda, semibrace, yb, census, lemma-tests.
Exit codes: 0 all checks passed, 1 a check failed (witness in the report),
2 usage or parse error.  Nothing is randomized; SEMITRUSS_WORKERS sets the
process count for the enumeration engine (default 1).
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from pathlib import Path

from .census import TrussFilter, enumerate_semigroups, run_census
from .core import idempotents, inverse_structure
from .errors import SemitrussError
from .inverse import check_order_inequalities
from .report import (
    PASS,
    bundle_report,
    census_document,
    lemma_document,
    render_json,
)
from .tableio import (
    parse_bundle,
    parse_cayley,
    serialize_cayley,
    serialize_pairmap,
)
from .truss import make_semitruss, to_semibrace, verify_semibrace
from .yang_baxter import build_yb_from_semitruss, verify_ybe


def _workers() -> int:
    raw = os.environ.get("SEMITRUSS_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _subject_for(path) -> dict:
    data = Path(path).read_bytes()
    return {
        "kind": "bundle",
        "path": str(path),
        "sha256": hashlib.sha256(data).hexdigest(),
    }


def _pick_idempotent(diamond, e: int | None) -> int:
    """CLI default: the smallest idempotent; library code never picks one."""
    if e is not None:
        return e
    idem = idempotents(diamond)
    if not idem:
        raise SemitrussError("diamond has no idempotent; pass --e explicitly")
    return idem[0]


def cmd_check(args) -> int:
    diamond, circ, lam = parse_bundle(args.bundle)
    report = bundle_report(diamond, circ, lam, _subject_for(args.bundle))
    out = render_json(report.to_dict())
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)
    return 1 if report.has_failure else 0


def cmd_derive_lambda(args) -> int:
    diamond = parse_cayley(args.diamond)
    circ = parse_cayley(args.circ)
    from .truss import derive_lambda

    derived = derive_lambda(diamond, circ)
    if derived is None:
        print("no lambda table satisfies the distributive law", file=sys.stderr)
        return 1
    lam, uniq = derived
    from .core import FiniteBinaryOp

    sys.stdout.write(serialize_cayley(FiniteBinaryOp(diamond.n, lam)))
    nonunique = [(a, c) for a in range(diamond.n) for c in range(diamond.n) if not uniq[a][c]]
    if nonunique:
        print(f"# non-unique cells (min-index chosen): {nonunique}")
    else:
        print("# all cells forced")
    return 0


def cmd_semibrace(args) -> int:
    diamond, circ, lam = parse_bundle(args.bundle)
    T = make_semitruss(diamond, circ, lam)
    e = _pick_idempotent(diamond, args.e)
    bullet = to_semibrace(T, e)
    sys.stdout.write(serialize_cayley(bullet))
    result = verify_semibrace(diamond, bullet)
    if not result:
        print(f"# semi-brace verification FAILED: {result.reason} {result.witness}")
        return 1
    print("# semi-brace law verified")
    return 0


def cmd_yb(args) -> int:
    diamond, circ, lam = parse_bundle(args.bundle)
    T = make_semitruss(diamond, circ, lam)
    e = _pick_idempotent(diamond, args.e)
    r = build_yb_from_semitruss(T, e)
    sys.stdout.write(serialize_pairmap(r))
    if args.verify:
        if not verify_ybe(r):
            print("# braid relation FAILED")
            return 1
        print("# braid relation verified")
    return 0


def cmd_census(args) -> int:
    filt = TrussFilter.from_names(args.filter or [])
    record = run_census(args.n, filt, iso=args.iso, workers=_workers())
    sys.stdout.write(render_json(census_document(record)))
    return 0


def cmd_lemma_tests(args) -> int:
    if args.n < 1:
        raise SemitrussError("--n must be >= 1")
    results = []
    for n in range(1, args.n + 1):
        for index, op in enumerate(
            enumerate_semigroups(n, allow_order_four=True, workers=_workers())
        ):
            istr = inverse_structure(op)
            if istr is None:
                continue
            results.append((n, index, check_order_inequalities(op, istr)))
    doc = lemma_document(args.n, results)
    sys.stdout.write(render_json(doc))
    failed = any(c["verdict"] != PASS for c in doc["checks"])
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semitruss",
        description="Verify distributive-law structures on finite Cayley tables, "
        "convert them to semi-braces and Yang-Baxter maps, and run censuses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run every applicable check suite on a bundle")
    p.add_argument("bundle", help="semi-truss bundle file (diamond/circ[/lambda])")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive-lambda", help="derive the lambda table for a pair")
    p.add_argument("--diamond", required=True, help="Cayley table file for ⋄")
    p.add_argument("--circ", required=True, help="Cayley table file for ∘")
    p.set_defaults(func=cmd_derive_lambda)

    p = sub.add_parser("semibrace", help="convert a bundle to its semi-brace")
    p.add_argument("bundle")
    p.add_argument("--e", type=int, default=None, help="idempotent (default: smallest)")
    p.set_defaults(func=cmd_semibrace)

    p = sub.add_parser("yb", help="emit the Yang-Baxter pair map of a bundle")
    p.add_argument("bundle")
    p.add_argument("--e", type=int, default=None, help="idempotent (default: smallest)")
    p.add_argument("--verify", action="store_true", help="also brute-force the braid relation")
    p.set_defaults(func=cmd_yb)

    p = sub.add_parser("census", help="count structures on a small carrier")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--filter",
        action="append",
        metavar="NAME",
        help="restrict the pair stream; repeatable "
        f"({', '.join(sorted(TrussFilter.FLAG_NAMES))})",
    )
    p.add_argument("--iso", action="store_true", help="count up to isomorphism")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("lemma-tests", help="product-order inequalities on inverse semigroups")
    p.add_argument("--n", type=int, required=True, help="largest carrier size (<= 4)")
    p.set_defaults(func=cmd_lemma_tests)

    return parser


def cli_dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (OSError, ValueError, SemitrussError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))
