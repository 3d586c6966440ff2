"""Command-line front end.

    macinterp compute --family G --index 1,0
    macinterp eval --family K --index 0,0 --point atau
    macinterp verify duality --n 2 --max-weight 3 --format json
    macinterp suite --all --n 2 --max-weight 3

Exit status: 0 on success, 1 if any identity fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .combin import bar_point, parse_vector, tilde_point
from .exactalg import FieldElem, Point
from .families import FamilyTag, a_tau, member, member_to_dict, tau_point
from .identities import REGISTRY, SweepConfig, run_identity

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits by itself; route its errors through our exit code instead
    def error(self, message):
        raise UsageError(message)


@dataclass
class Command:
    subcommand: str
    family: FamilyTag | None = None
    index: tuple[int, ...] | None = None
    n: int | None = None
    fmt: str = "text"
    output: str | None = None
    timing: bool = True


def _vector(text):
    try:
        return parse_vector(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def parse_point(spec: str, n: int, scale: FieldElem | None = None) -> Point:
    """Named evaluation points: atau, ainvtau, bar:v, tilde:v, barinv:v."""
    if spec == "atau":
        pt = a_tau(n)
    elif spec == "ainvtau":
        pt = tau_point(n).scale(FieldElem.parse("a").inverse())
    elif spec == "tau":
        pt = tau_point(n)
    else:
        kind, sep, rest = spec.partition(":")
        if not sep or kind not in ("bar", "tilde", "barinv"):
            raise UsageError(f"unknown point {spec!r}")
        v = _vector(rest)
        if len(v) != n:
            raise UsageError(f"point vector {rest!r} has length {len(v)}, expected {n}")
        pt = {"bar": bar_point, "tilde": tilde_point}.get(kind, lambda w: bar_point(w).inverse())(v)
    return pt.scale(scale) if scale is not None else pt


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="macinterp", description="Interpolation Macdonald polynomials over Q(q,t,a).")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--output", help="write to this file instead of stdout")
        sp.add_argument("--no-timing", action="store_true",
                        help="omit elapsed times so output is byte-reproducible")

    for name in ("compute", "eval"):
        sp = sub.add_parser(name)
        sp.add_argument("--family", required=True)
        sp.add_argument("--index", required=True)
        sp.add_argument("--n", type=int)
        if name == "eval":
            sp.add_argument("--point", required=True)
            sp.add_argument("--scale", help="scalar multiplying the point, e.g. a")
        common(sp)

    for name in ("verify", "suite"):
        sp = sub.add_parser(name)
        if name == "verify":
            sp.add_argument("identity", nargs="+")
        else:
            sp.add_argument("--all", action="store_true")
            sp.add_argument("--identity", action="append", default=[])
        sp.add_argument("--n", type=int, action="append",
                        help="number of variables; repeat for several (suite default: 1 2 3)")
        sp.add_argument("--max-weight", type=int)
        sp.add_argument("--lo", type=int)
        sp.add_argument("--hi", type=int)
        common(sp)
    return p


def _member(args):
    try:
        tag = FamilyTag.parse(args.family)
    except ValueError as e:
        raise UsageError(str(e)) from None
    index = _vector(args.index)
    if args.n is not None and args.n != len(index):
        raise UsageError(f"index {args.index!r} does not have length n={args.n}")
    try:
        return tag, index, member(tag, index)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _configs(args) -> list[SweepConfig]:
    ns = args.n or ([1, 2, 3] if args.subcommand == "suite" else [2])
    out = []
    for n in ns:
        cfg = SweepConfig.default(n, args.max_weight)
        lo = cfg.lo if args.lo is None else args.lo
        hi = cfg.hi if args.hi is None else args.hi
        try:
            out.append(SweepConfig(n, lo, hi, cfg.max_weight))
        except ValueError as e:
            raise UsageError(str(e)) from None
    return out


def _run_checks(args, names):
    unknown = [x for x in names if x not in REGISTRY]
    if unknown:
        raise UsageError(f"unknown identity {unknown[0]!r}; known: {', '.join(REGISTRY)}")
    timing = not args.no_timing
    reports = [run_identity(name, cfg) for cfg in _configs(args) for name in names]
    if args.format == "json":
        text = json.dumps([r.to_dict(timing) for r in reports], sort_keys=True, indent=1)
    else:
        text = "\n".join(f"[n={r.params['n']}] " + r.to_text(timing) for r in reports)
    return text, all(r.passed for r in reports)


def dispatch(args) -> tuple[str, int]:
    if args.subcommand == "compute":
        tag, index, value = _member(args)
        if args.format == "json":
            return json.dumps(member_to_dict(tag, index, value), sort_keys=True), EXIT_OK
        return str(value), EXIT_OK
    if args.subcommand == "eval":
        tag, index, value = _member(args)
        scale = None
        if args.scale is not None:
            try:
                scale = FieldElem.parse(args.scale)
            except ValueError as e:
                raise UsageError(f"bad scale {args.scale!r}: {e}") from None
        pt = parse_point(args.point, len(index), scale)
        val = value.substitute(pt)
        if args.format == "json":
            return json.dumps({"family": str(tag), "index": list(index), "point": args.point,
                               "value": str(val)}, sort_keys=True), EXIT_OK
        return str(val), EXIT_OK
    if args.subcommand == "verify":
        names = args.identity
    else:
        if not args.all and not args.identity:
            raise UsageError("suite needs --all or at least one --identity")
        names = list(REGISTRY) if args.all else args.identity
    text, ok = _run_checks(args, names)
    return text, EXIT_OK if ok else EXIT_FAIL


_VALUE_FLAGS = ("--index", "--point", "--lo", "--hi")


def _glue_negative(argv):
    """Turn ``--index -1,0`` into ``--index=-1,0`` so argparse accepts negative vectors."""
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = _glue_negative(sys.argv[1:] if argv is None else list(argv))
    try:
        args = build_parser().parse_args(argv)
        text, code = dispatch(args)
    except UsageError as e:
        print(f"macinterp: usage error: {e}", file=stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
