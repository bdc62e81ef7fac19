"""Command-line frontend.

Exit codes: 0 success, 1 identity violated, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import arith, identity
from .errors import IdentityError
from .identity import FineSpec
from .partition import enumerate_partitions, stats
from .ring import parse_rational, ring_str, ring_to_json
from .seqexpr import materialize


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _monomial(text: str):
    coeff, sep, exp = text.partition(",")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected p/q,e but got {text!r}")
    try:
        return parse_rational(coeff), int(exp)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="partition-identities", description="Exact checks of weighted partition identities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, seq=True):
        sp.add_argument("--n-max", type=_positive, default=20)
        sp.add_argument("--t", type=_rational, default=Fraction(2))
        sp.add_argument("--u", type=_rational, default=Fraction(3))
        if seq:
            sp.add_argument("--seq", default="n", help="sequence a_n as an expression in n")
        sp.add_argument("--mode", choices=("evaluated", "symbolic"), default="evaluated")
        sp.add_argument("--format", choices=("table", "json"), default="table")
        sp.add_argument("--output", "-o", help="write to this file instead of standard output")

    v = sub.add_parser("verify", help="check an identity for n = 1..N")
    v.add_argument("identity", choices=identity.IDENTITIES)
    common(v)
    v.add_argument("--corrupt-rhs", type=_positive, metavar="N", help=argparse.SUPPRESS)

    e = sub.add_parser("expand", help="print one side of thm1/thm2/thm3 per n")
    e.add_argument("identity", choices=("thm1", "thm2", "thm3"))
    e.add_argument("--side", choices=("lhs", "rhs"), required=True)
    common(e)

    pa = sub.add_parser("partitions", help="list the partitions of n")
    pa.add_argument("n", type=_positive)
    pa.add_argument("--stats", action="store_true")
    pa.add_argument("--format", choices=("table", "json"), default="table")
    pa.add_argument("--output", "-o")

    tr = sub.add_parser("transform", help="divisor-sum transform or its Moebius inverse")
    g = tr.add_mutually_exclusive_group(required=True)
    g.add_argument("--forward", action="store_true")
    g.add_argument("--inverse", action="store_true")
    tr.add_argument("--seq", required=True)
    tr.add_argument("--n-max", type=_positive, default=20)
    tr.add_argument("--format", choices=("table", "json"), default="table")
    tr.add_argument("--output", "-o")

    f = sub.add_parser("fine", help="product vs partition sum for a JSON factor table")
    f.add_argument("--spec", required=True, help="FineSpec JSON file")
    f.add_argument("--n-max", type=_positive, default=20)
    f.add_argument("--format", choices=("table", "json"), default="table")
    f.add_argument("--output", "-o")

    h = sub.add_parser("heine", help="check the Heine transformation for monomial parameters")
    for name in "abcz":
        h.add_argument(f"--{name}", type=_monomial, required=True, metavar="p/q,e")
    h.add_argument("--n-max", type=_positive, default=12)
    h.add_argument("--format", choices=("table", "json"), default="table")
    h.add_argument("--output", "-o")
    return p


def _emit(args, payload, text: str) -> None:
    out = json.dumps(payload, indent=2) if args.format == "json" else text
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _report(args, rep) -> int:
    _emit(args, rep.to_json(), rep.table())
    bad = rep.first_failure()
    if bad is not None:
        print(f"{rep.identity}: identity violated; first failing n = {bad.n}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args) -> int:
    perturb = None
    if args.corrupt_rhs:
        target = args.corrupt_rhs
        perturb = lambda n, rhs: rhs + 1 if n == target else rhs  # noqa: E731
    rep = identity.check_identity(
        args.identity, a=args.seq, t=args.t, u=args.u, mode=args.mode, N=args.n_max, perturb=perturb
    )
    return _report(args, rep)


def _cmd_expand(args) -> int:
    rows = identity.expand_side(args.identity, args.side, a=args.seq, t=args.t, u=args.u, mode=args.mode, N=args.n_max)
    payload = {
        "identity": args.identity,
        "side": args.side,
        "mode": args.mode,
        "rows": [{"n": n, "value": ring_to_json(v)} for n, v in rows],
    }
    text = "\n".join(f"{n:>4}  {ring_str(v)}" for n, v in rows)
    _emit(args, payload, text)
    return 0


def _cmd_partitions(args) -> int:
    parts = list(enumerate_partitions(args.n))
    rows = []
    lines = []
    for p in parts:
        row = p.to_json()
        line = f"{args.n} = {p}"
        if args.stats:
            st = stats(p)
            row["stats"] = st.to_json()
            line += f"    k={st.k} Q={st.Q} s={st.s} l={st.l}"
        rows.append(row)
        lines.append(line)
    _emit(args, {"n": args.n, "count": len(parts), "partitions": rows}, "\n".join(lines))
    return 0


def _cmd_transform(args) -> int:
    a = materialize(args.seq, args.n_max)
    b = arith.divisor_transform(a) if args.forward else arith.mobius_inverse(a)
    direction = "forward" if args.forward else "inverse"
    payload = {"direction": direction, "seq": args.seq, "input": a.to_json(), "output": b.to_json()}
    text = "\n".join(f"{n:>4}  {ring_str(a[n])}  ->  {ring_str(b[n])}" for n in range(1, args.n_max + 1))
    _emit(args, payload, text)
    return 0


def _cmd_fine(args) -> int:
    try:
        with open(args.spec) as fh:
            spec = FineSpec.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, IdentityError):
            raise
        raise UsageError(f"cannot read FineSpec {args.spec}: {exc}") from None
    return _report(args, identity.fine_check(spec, args.n_max))


def _cmd_heine(args) -> int:
    return _report(args, identity.heine_check(args.a, args.b, args.c, args.z, args.n_max))


COMMANDS = {
    "verify": _cmd_verify,
    "expand": _cmd_expand,
    "partitions": _cmd_partitions,
    "transform": _cmd_transform,
    "fine": _cmd_fine,
    "heine": _cmd_heine,
}


def run(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except IdentityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
