"""Command-line front end.

Exit codes: 0 success, 1 usage or parameter error, 2 invariant/equivalence failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .errors import DomainError, ParameterError
from .ff import MAX_Q
from .report import SweepSpec, find_primes, render, render_csv, row_ok, run_sweep, verify_case
from .selftest import run_selftest

EXIT_OK, EXIT_USAGE, EXIT_FAILURE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jacobi-valuation", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ell_f(p):
        p.add_argument("--ell", type=int, required=True)
        p.add_argument("--f", type=int, required=True)

    def output(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("verify", help="verify every condition for one prime q")
    ell_f(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, default=None, help="generator of F_q^x (default: smallest)")
    p.add_argument("--k-cap", type=int, default=None)
    output(p)

    p = sub.add_parser("sweep", help="verify all primes q == 1 (mod ell*f) in a range")
    ell_f(p)
    p.add_argument("--q-min", type=int, default=2)
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--k-cap", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    output(p)

    p = sub.add_parser("primes", help="list primes q == 1 (mod ell*f) in a range")
    ell_f(p)
    p.add_argument("--q-min", type=int, default=2)
    p.add_argument("--q-max", type=int, required=True)
    output(p)

    p = sub.add_parser("selftest", help="run the built-in invariant suite")
    p.add_argument("--samples", type=int, default=2000, help="random instances per binomial identity")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_verify(args) -> int:
    if args.q > MAX_Q:
        raise ParameterError(f"q={args.q} exceeds {MAX_Q}")
    row = verify_case(args.ell, args.f, args.q, args.g, args.k_cap)
    _write(render_csv([row]) if args.format == "csv" else json.dumps(row, indent=2) + "\n", args.out)
    return EXIT_OK if row_ok(row) else EXIT_FAILURE


def cmd_sweep(args) -> int:
    spec = SweepSpec(
        ell=args.ell, f=args.f, q_min=args.q_min, q_max=args.q_max,
        g_override=args.g, k_cap=args.k_cap, jobs=args.jobs, format=args.format,
    )
    rows = run_sweep(spec)
    _write(render(spec.format, spec.header(), rows), args.out)
    bad = [r["q"] for r in rows if not row_ok(r)]
    if bad:
        print(f"disagreement at q in {bad}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_primes(args) -> int:
    primes = find_primes(args.ell, args.f, args.q_min, args.q_max)
    text = json.dumps(primes) + "\n" if args.format == "json" else "q\n" + "".join(f"{q}\n" for q in primes)
    _write(text, args.out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    passed, failed = run_selftest(args.samples, args.seed, args.inject_fault)
    if failed:
        print(f"selftest failed at {failed}", file=sys.stderr)
        return EXIT_FAILURE
    print(f"selftest: {passed} checks passed")
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "sweep": cmd_sweep, "primes": cmd_primes, "selftest": cmd_selftest}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return COMMANDS[args.command](args)
    except (ParameterError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
