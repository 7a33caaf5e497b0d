"""Command-line interface: Pisot search, nearest powers, SLP emission."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from . import errors
from .algebraic import FieldSpec, IntPoly, analyze_minpoly, embeddings_for
from .pisotsearch import (
    SearchParams,
    find_pisot,
    format_fraction,
    minkowski_bound,
    verify_pisot,
)
from .powtrace import nearest_power, nearest_power_mod
from .slp import emit_power_slp, format_slp, parse_slp, slp_eval, slp_length

MAX_N = 10**19
MAX_EXACT_N = 10**6


def parse_poly(source: str) -> IntPoly:
    """Parse expressions like "x^3 - x - 1" into an integer polynomial."""
    s = source
    n = len(s)
    pos = 0

    def skip():
        nonlocal pos
        while pos < n and s[pos] in " \t":
            pos += 1

    def read_int():
        nonlocal pos
        j = pos
        while j < n and s[j].isdigit():
            j += 1
        v = int(s[pos:j])
        pos = j
        return v

    terms: dict[int, int] = {}
    skip()
    if pos >= n:
        raise errors.PolySyntaxError("empty expression", pos)
    first = True
    while pos < n:
        skip()
        if first:
            sign = 1
            if pos < n and s[pos] in "+-":
                sign = -1 if s[pos] == "-" else 1
                pos += 1
            first = False
        else:
            if pos >= n:
                break
            if s[pos] not in "+-":
                raise errors.PolySyntaxError("expected '+' or '-'", pos)
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        skip()
        start = pos
        coef = None
        if pos < n and s[pos].isdigit():
            coef = read_int()
        exp = 0
        if pos < n and s[pos] == "x":
            pos += 1
            exp = 1
            if pos < n and s[pos] == "^":
                pos += 1
                if pos >= n or not s[pos].isdigit():
                    raise errors.PolySyntaxError("expected exponent", pos)
                exp = read_int()
        if pos == start:
            raise errors.PolySyntaxError("expected a term", pos)
        terms[exp] = terms.get(exp, 0) + sign * (1 if coef is None else coef)
        skip()
    degree = max((e for e, c in terms.items() if c != 0), default=-1)
    if degree < 1:
        raise errors.PolySyntaxError("polynomial must have degree >= 1", 0)
    return IntPoly(tuple(terms.get(e, 0) for e in range(degree + 1)))


def _parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise errors.ParseError(f"bad rational {s!r}") from exc


def _parse_n(s: str) -> int:
    try:
        v = int(s)
    except ValueError as exc:
        raise errors.ParseError(f"bad integer {s!r}") from exc
    if not 0 <= v <= MAX_N:
        raise errors.ParseError(f"n must lie in [0, 10^19], got {s}")
    return v


def _monic_poly(expr: str) -> IntPoly:
    f = parse_poly(expr)
    if not f.is_monic:
        raise errors.NonMonic(f"a monic polynomial is required, got {f}")
    return f


def _field_spec(args) -> FieldSpec:
    if getattr(args, "conductor", None) is not None:
        return FieldSpec(kind="cyclotomic", conductor=args.conductor)
    if getattr(args, "field", None):
        return FieldSpec.from_file(args.field)
    raise errors.ParseError("one of --conductor or --field is required")


def _json_int(v: int):
    return v if abs(v) < 10**15 else str(v)


def _emit(args, obj: dict, plain_lines):
    if args.json:
        sys.stdout.write(json.dumps(obj) + "\n")
    else:
        for line in plain_lines:
            sys.stdout.write(line + "\n")


def _candidate_output(args, cand):
    obj = cand.to_json()
    plain = [
        f"value: {mpmath.nstr(cand.value.mid, 40)}",
        "coefficients: " + " ".join(str(c) for c in cand.coefficients),
        "conjugate moduli: "
        + " ".join(mpmath.nstr(m.mid, 20) for m in cand.conjugate_moduli),
        f"minpoly: {cand.minpoly}",
        f"epsilon: {format_fraction(cand.epsilon_certified)}",
    ]
    _emit(args, obj, plain)


def _cmd_find(args):
    spec = _field_spec(args)
    params = SearchParams(
        epsilon=_parse_rational(args.epsilon), precision_bits=args.precision
    )
    _candidate_output(args, find_pisot(spec, params))
    return 0


def _cmd_verify(args):
    spec = _field_spec(args)
    try:
        z = [int(c) for c in args.coeffs.split(",")]
    except ValueError as exc:
        raise errors.ParseError(f"bad coefficient list {args.coeffs!r}") from exc
    emb = embeddings_for(spec, args.precision)
    cand = verify_pisot(z, emb, _parse_rational(args.epsilon))
    _candidate_output(args, cand)
    return 0


def _cmd_pow(args):
    f = _monic_poly(args.minpoly)
    n = _parse_n(args.n)
    info = analyze_minpoly(f, args.precision)
    if args.modulus is not None:
        m = _parse_n(args.modulus)
        r = nearest_power_mod(f, n, m, info)
        obj = {"minpoly": str(f), "n": _json_int(n), "modulus": _json_int(m),
               "result": _json_int(r)}
    else:
        if n > MAX_EXACT_N:
            raise errors.ParseError(
                f"n > {MAX_EXACT_N} needs -m: the exact answer has on the order "
                "of n*log2(alpha) bits; compute it modulo m instead"
            )
        r = nearest_power(f, n, info)
        obj = {"minpoly": str(f), "n": _json_int(n), "result": _json_int(r)}
    _emit(args, obj, [str(r)])
    return 0


def _cmd_slp_emit(args):
    f = _monic_poly(args.minpoly)
    n = _parse_n(args.n)
    info = analyze_minpoly(f, args.precision)
    text = format_slp(emit_power_slp(f, n, info))
    if args.output:
        with open(args.output, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_slp_eval(args):
    with open(args.file, "r", encoding="ascii") as fh:
        p = parse_slp(fh.read())
    if args.modulus is not None:
        r = slp_eval(p, _parse_n(args.modulus))
    else:
        r = slp_eval(p)
    obj = {"length": slp_length(p), "result": _json_int(r)}
    _emit(args, obj, [str(r)])
    return 0


def _cmd_threshold(args):
    f = _monic_poly(args.minpoly)
    info = analyze_minpoly(f, args.precision)
    obj = {
        "minpoly": str(f),
        "threshold_n0": info.threshold_n0,
        "second_modulus": mpmath.nstr(info.second_modulus.mid, 20),
    }
    _emit(args, obj, [str(info.threshold_n0)])
    return 0


def _cmd_bound(args):
    b = minkowski_bound(args.degree, args.disc, _parse_rational(args.delta))
    obj = {
        "degree": args.degree,
        "disc": _json_int(args.disc),
        "delta": args.delta,
        "bound": mpmath.nstr(b.mid, 20),
    }
    _emit(args, obj, [mpmath.nstr(b.mid, 20)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pisot",
        description="Find Pisot generators of totally real Galois fields and "
        "compute nearest integers to their powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_field_flags(p):
        p.add_argument("--conductor", type=int, help="cyclotomic conductor n")
        p.add_argument("--field", help="path to a FieldSpec JSON file")
        p.add_argument("--precision", type=int, default=256, metavar="BITS")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("find", help="search for an (epsilon-)Pisot generator")
    add_field_flags(p)
    p.add_argument("--epsilon", default="1", help="rational bound on conjugate moduli")
    p.set_defaults(func=_cmd_find)

    p = sub.add_parser("verify", help="certify a given coefficient vector")
    add_field_flags(p)
    p.add_argument("--coeffs", required=True, help="comma-separated integers")
    p.add_argument("--epsilon", default="1")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("pow", help="nearest integer to alpha^n, optionally mod m")
    p.add_argument("--minpoly", required=True, help='e.g. "x^2-x-1"')
    p.add_argument("-n", required=True)
    p.add_argument("-m", dest="modulus")
    p.add_argument("--precision", type=int, default=128, metavar="BITS")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_pow)

    p = sub.add_parser("slp", help="straight-line program tools")
    slp_sub = p.add_subparsers(dest="slp_command", required=True)
    pe = slp_sub.add_parser("emit", help="emit a program for [alpha^n]")
    pe.add_argument("--minpoly", required=True)
    pe.add_argument("-n", required=True)
    pe.add_argument("-o", dest="output", help="output file (default stdout)")
    pe.add_argument("--precision", type=int, default=128, metavar="BITS")
    pe.set_defaults(func=_cmd_slp_emit)
    pv = slp_sub.add_parser("eval", help="evaluate a program file")
    pv.add_argument("file")
    pv.add_argument("-m", dest="modulus")
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(func=_cmd_slp_eval)

    p = sub.add_parser("threshold", help="trace-path threshold n0 of a Pisot minpoly")
    p.add_argument("--minpoly", required=True)
    p.add_argument("--precision", type=int, default=128, metavar="BITS")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("bound", help="upper bound on the minimal Pisot generator")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--delta", required=True, help="rational in (0, 1)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bound)
    return parser


_USAGE_ERRORS = (
    errors.PolySyntaxError,
    errors.ParseError,
    errors.MalformedProgram,
    errors.NonMonic,
)


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2
    except errors.PisotError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"{exc}\n")
        return 1


def main(argv=None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
