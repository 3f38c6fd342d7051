"""Command-line front end: ``tabprime <subcommand> ...``.

Exit codes: 0 success, 2 parse error, 3 guard violation, 4 domain error.
Results go to stdout, one-line diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import canonical_basis, catalog as catalog_mod, correspondence, fixtures, primality, promotion
from .errors import GuardExceeded, ParseError, TabprimeError
from .factorization import noncrossing_factorize
from .separation import noncrossing, weakly_separated
from .tableaux import Tableau, format_column, format_tableau, parse_columns, parse_tableau, reduce

EXIT_OK, EXIT_PARSE, EXIT_GUARD, EXIT_DOMAIN = 0, 2, 3, 4


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _columns_text(cols) -> str:
    return "[" + ",".join(format_column(c) for c in cols) + "]"


def _subset(text: str) -> tuple[int, ...]:
    cols = parse_columns(text)
    if len(cols) != 1:
        raise ParseError(f"expected a single subset, got {text!r}")
    return tuple(cols[0])


def _tableau(args) -> Tableau:
    return parse_tableau(args.tableau, args.n, args.k)


def cmd_check_ws(args) -> tuple[object, str]:
    value = weakly_separated(_subset(args.I), _subset(args.J))
    return {"weakly_separated": value}, str(value).lower()


def cmd_check_noncrossing(args):
    value = noncrossing(_subset(args.I), _subset(args.J))
    return {"noncrossing": value}, str(value).lower()


def cmd_factorize(args):
    parts = noncrossing_factorize(_tableau(args)).parts
    return [list(p) for p in parts], _columns_text(parts)


def cmd_to_monomial(args):
    mono = correspondence.tableau_to_monomial(_tableau(args))
    return correspondence.monomial_to_json(mono), correspondence.format_monomial(mono)


def cmd_to_tableau(args):
    mono = correspondence.parse_monomial(args.monomial, args.k, args.n)
    t = correspondence.monomial_to_tableau(mono)
    return [list(c) for c in t.columns], format_tableau(t)


def cmd_reduce(args):
    t = reduce(_tableau(args))
    return [list(c) for c in t.columns], format_tableau(t)


def cmd_is_prime(args):
    t = _tableau(args)
    m = reduce(t).m
    if m == 2:
        v = primality.is_prime_2col(t)
        text = f"prime = {str(v.prime).lower()}\nwitness = {_columns_text(v.witness)}\nbasis = {v.basis.value}"
        return v.to_json(), text
    if m < 2:
        raise primality.WrongColumnCount(f"{format_tableau(t)} reduces to {m} column(s)")
    v = primality.screen_verdict(t)
    prime = True if v.prime else None
    data = {"prime": prime, "screen": v.prime, "basis": v.basis.value, "witness": [list(c) for c in v.witness]}
    text = (f"prime = {'true' if prime else 'unknown'}\nscreen = {str(v.prime).lower()}\n"
            f"witness = {_columns_text(v.witness)}\nbasis = {v.basis.value}")
    return data, text


def cmd_count_prime(args):
    value = primality.count_2col_prime(args.k, args.n)
    return {"k": args.k, "n": args.n, "prime": value}, str(value)


def cmd_classify(args):
    if args.cols != 2:
        raise primality.WrongColumnCount("classification is only decided for --cols 2")
    cls = primality.classify_2col(args.k, args.n, workers=args.workers)
    prime = [format_tableau(t) for t in cls.prime]
    if args.prime_only:
        return {"k": args.k, "n": args.n, "prime": prime}, "\n".join(prime)
    rest = [format_tableau(t) for t in cls.non_prime]
    data = {"k": args.k, "n": args.n, "total": cls.total, "prime": prime, "non_prime": rest}
    lines = [f"{s} prime" for s in prime] + [f"{s} non-prime" for s in rest]
    return data, "\n".join(sorted(lines))


def cmd_promote(args):
    t = promotion.promote(_tableau(args), args.steps)
    return [list(c) for c in t.columns], format_tableau(t)


def cmd_orbit(args):
    orb = promotion.orbit(_tableau(args))
    return [[list(c) for c in t.columns] for t in orb], "\n".join(format_tableau(t) for t in orb)


def cmd_orbit_cover(args):
    fx = fixtures.load(args.fixtures)
    seeds = fx.tagged(args.tag) if args.tag else fx.tableaux()
    cover = sorted(promotion.orbit_cover(seeds))
    strings = [format_tableau(t) for t in cover]
    return {"fixture": fx.name, "k": fx.k, "n": fx.n, "size": len(cover), "tableaux": strings}, "\n".join(strings)


def cmd_ch(args):
    value = canonical_basis.ch(_tableau(args), quotient=args.quotient)
    return value.to_json(), str(value)


def cmd_catalog(args):
    report = catalog_mod.catalog(args.k, args.n, workers=args.workers)
    lines = [f"Gr({args.k},{args.n}): {report['totals']['two_column']} two-column tableaux, "
             f"{report['totals']['prime']} prime in {report['totals']['orbits']} promotion orbits"]
    for c in report["fixture_checks"]:
        lines.append(f"{'PASS' if c['pass'] else 'FAIL'} {c['name']}: expected {c['expected']}, got {c['actual']}")
    return report, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tabprime", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    kn = argparse.ArgumentParser(add_help=False)
    kn.add_argument("--k", type=int, required=True)
    kn.add_argument("--n", type=int, required=True)
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    par = argparse.ArgumentParser(add_help=False)
    par.add_argument("--workers", type=int, default=None, help="defaults to $TABPRIME_THREADS or 1")

    def add(name, func, parents=(), **kw):
        p = sub.add_parser(name, parents=[out, *parents], **kw)
        p.set_defaults(func=func)
        return p

    for name, func in (("check-ws", cmd_check_ws), ("check-noncrossing", cmd_check_noncrossing)):
        p = add(name, func, help="test a pair of equal-size subsets")
        p.add_argument("I")
        p.add_argument("J")
    for name, func, help_ in (
        ("factorize", cmd_factorize, "unique pairwise noncrossing columns"),
        ("to-monomial", cmd_to_monomial, "dominant monomial of a tableau"),
        ("reduce", cmd_reduce, "remove the maximal frozen factor"),
        ("is-prime", cmd_is_prime, "primality verdict"),
        ("orbit", cmd_orbit, "promotion orbit"),
    ):
        add(name, func, [kn], help=help_).add_argument("tableau")
    p = add("to-tableau", cmd_to_tableau, [kn], help="reduced tableau of a monomial")
    p.add_argument("monomial")
    add("count-prime", cmd_count_prime, [kn], help="closed-form 2-column prime count")
    p = add("classify", cmd_classify, [kn, par], help="classify every 2-column tableau")
    p.add_argument("--cols", type=int, default=2)
    p.add_argument("--prime-only", action="store_true")
    p = add("promote", cmd_promote, [kn], help="apply promotion")
    p.add_argument("tableau")
    p.add_argument("--steps", type=int, default=1)
    p = add("orbit-cover", cmd_orbit_cover, help="union of promotion orbits of shipped seeds")
    p.add_argument("--fixtures", required=True, choices=fixtures.NAMES)
    p.add_argument("--tag", default=None)
    p = add("ch", cmd_ch, [kn], help="dual canonical basis element")
    p.add_argument("tableau")
    p.add_argument("--quotient", action="store_true", help="set frozen Pluecker coordinates to 1")
    add("catalog", cmd_catalog, [kn, par], help="full 2-column catalog with cross-checks")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if hasattr(args, "k") and (args.k < 1 or args.n < args.k):
        print(f"error: need 1 <= k <= n, got k={args.k}, n={args.n}", file=stderr)
        return EXIT_PARSE
    try:
        data, text = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=stderr)
        return EXIT_GUARD
    except (TabprimeError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    print(_dump(data) if args.json else text, file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
