"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 resource cap exceeded,
3 witness not found.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import cayley, dim_estimator, finite_section, foelner, group_ring, witness
from .cayley import DEFAULT_CAP
from .errors import RadiusExceeded, ResourceCapExceeded, VndimError
from .finite_section import format_decimal, format_rational
from .groups import ELEMENT_GRAMMAR, GroupSpec

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_NOT_FOUND = 0, 1, 2, 3

RING_GRAMMAR = """\
ring elements (--alpha):
  <term> (('+'|'-') <term>)*      with  <term> = <coeff>*<element>
  <coeff> = p | p/q | p/q*i | p/q+r/s*i | p/q-r/s*i
  a leading sign negates the whole coefficient of its term, e.g.
  "1*(0) - 1*(1)" in z:1, "1*(0;0) - 1*(0;1)" in zxz2
span files (dim --span): one 're im element' line per term, vectors
  separated by blank lines; window files: one element literal per line.
  '#' starts a comment in both.
randomized tests seed from VNDIM_SEED (default 20240531).
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _group(text: str) -> GroupSpec:
    try:
        return GroupSpec.parse(text)
    except VndimError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _n_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad n-list {text!r}") from exc
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError("n-list entries must be positive integers")
    return out


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if v < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    epilog = ELEMENT_GRAMMAR + RING_GRAMMAR
    p = _Parser(
        prog="vndim",
        description="Exact finite-section bounds for kernels of group-ring convolution operators.",
        epilog=epilog,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="element-count cap for enumerations")
    p.add_argument("-o", "--output", help="write the report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_):
        sp = sub.add_parser(name, help=help_, epilog=epilog, formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.add_argument("--group", type=_group, required=True, help="z:<d>, heis, zxz2 or lamp")
        return sp

    sp = cmd("ball", "list the ball of radius r as 'distance<TAB>element'")
    sp.add_argument("--radius", type=_nonneg, required=True)

    sp = cmd("foelner", "sizes and boundary ratio of the preset window F_n")
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--r", type=_nonneg, required=True)

    sp = cmd("bounds", "certified bounds on dim Ker M_alpha for each window")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--n-list", type=_n_list, required=True)
    sp.add_argument("--decimal", type=_positive, metavar="DIGITS", help="add decimal columns")
    sp.add_argument("--workers", type=_positive, default=1, help="parallel processes over windows")

    sp = cmd("dim", "projection dimension dim_A of a finite span")
    sp.add_argument("--span", required=True, help="span file")
    sp.add_argument("--window", required=True, help="window (elements) file")
    sp.add_argument("--decimal", type=_positive, default=finite_section.DECIMAL_DIGITS, metavar="DIGITS")

    sp = cmd("witness", "search for gamma != 0 with alpha*gamma = 0")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--n-max", type=_positive, required=True)
    return p


def _read_span(spec: GroupSpec, path: str) -> list:
    with open(path) as fh:
        text = fh.read()
    blocks, cur = [], []
    for line in text.splitlines():
        if line.split("#", 1)[0].strip():
            cur.append(line)
        elif cur and not line.strip():
            blocks.append(cur)
            cur = []
    if cur:
        blocks.append(cur)
    return [group_ring.parse_ring_lines(spec, b) for b in blocks]


def _read_window(spec: GroupSpec, path: str) -> list:
    with open(path) as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    return [spec.parse_element(ln) for ln in lines if ln]


def _dispatch(args, out: TextIO) -> int:
    spec = args.group
    cap = args.cap
    if args.command == "ball":
        for g, d in cayley.ball(spec, args.radius, cap).entries:
            out.write(f"{d}\t{spec.format_element(g)}\n")
        return EXIT_OK
    if args.command == "foelner":
        F = foelner.foelner_set(spec, args.n, cap)
        nb = len(foelner.r_boundary(spec, F, args.r))
        out.write("n\t|F|\t|dF|\t|G|\tratio\n")
        out.write(f"{args.n}\t{len(F)}\t{nb}\t{len(F) - nb}\t{format_rational(Fraction(nb, len(F)))}\n")
        return EXIT_OK
    if args.command == "bounds":
        alpha = group_ring.parse_ring(spec, args.alpha)
        reports = finite_section.convergence_report(spec, alpha, args.n_list, cap, workers=args.workers)
        out.write(finite_section.reports_tsv(reports, args.decimal))
        return EXIT_OK
    if args.command == "dim":
        W = dim_estimator.SpannedSubspace(_read_span(spec, args.span), _read_window(spec, args.window))
        value = dim_estimator.dim_A(W)
        out.write("dim_A\tdecimal\n")
        out.write(f"{format_rational(value)}\t{format_decimal(value, args.decimal)}\n")
        return EXIT_OK
    if args.command == "witness":
        alpha = group_ring.parse_ring(spec, args.alpha)
        res = witness.find_witness(spec, alpha, args.n_max, cap)
        if res.found:
            out.write(group_ring.format_ring(spec, res.gamma) + "\n")
            return EXIT_OK
        out.write(f"NOT FOUND up to n={args.n_max}\n")
        return EXIT_NOT_FOUND
    raise AssertionError(args.command)


def run(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        if args.output:
            with open(args.output, "w") as fh:
                return _dispatch(args, fh)
        return _dispatch(args, stdout)
    except (ResourceCapExceeded, RadiusExceeded) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except (VndimError, ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
