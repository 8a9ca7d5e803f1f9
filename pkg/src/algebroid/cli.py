"""Command-line interface: decide irreducibility of a curve ideal read
from a small text file, inspect weights and initial forms, and re-check
previously emitted JSON certificates.

Ideal files are line oriented.  A header declares the coefficient field
and the variable names, then ``ideal:`` starts the generator list, one
polynomial per line::

    char 0
    vars x y
    ideal:
    (y^2 - x^3)^2 - x^7

An optional ``ext`` line between ``char`` and ``vars`` adjoins a root of
a monic polynomial in the reserved symbol ``th``; generators may then
use ``th`` in their coefficients::

    char 5
    ext th^2 + 3
    vars x y
    ideal:
    y^2 - th*x^3

Blank lines and ``#`` comments are ignored.  Exit codes: ``decide``
returns 0 for irreducible, 1 for reducible and 2 for any parse or
precondition failure; ``verify`` returns 0 for a valid certificate, 1
for an invalid one and 2 for unreadable input; the query commands
return 0 on success and 2 on error.  Diagnostics go to stderr.
"""

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from .decide import (Certificate, DecisionReport, _monomial_witness,
                     assert_preconditions, decide_irreducible,
                     value_semigroup, verify_certificate)
from .errors import AlgebroidError, ParseError
from .groebner import IdealHandle
from .localalg import initial_ideal, intersection_number
from .polyring import INF, Poly, RingCtx, parse_poly
from .scalars import FieldSpec
from .semigroups import conductor, gcd_weights, membership

_EXT_NAME = "th"


# ------------------------------------------------------------ ideal files

def _parse_char(text: str, lineno: int) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(
            f"line {lineno}: 'char' expects an integer, got {text!r}") from None


def _extension_field(base: FieldSpec, text: str, lineno: int) -> FieldSpec:
    ring = RingCtx(base, (_EXT_NAME,))
    try:
        p = parse_poly(text, ring)
    except AlgebroidError as exc:
        raise ParseError(f"line {lineno}: bad extension polynomial: {exc}")
    if p.is_zero():
        raise ParseError(f"line {lineno}: extension polynomial is zero")
    deg = max(m[0] for m in p.terms)
    if deg < 2:
        raise ParseError(
            f"line {lineno}: extension degree must be at least two")
    if not base.eq(p.terms[(deg,)], base.one()):
        raise ParseError(
            f"line {lineno}: extension polynomial must be monic")
    coeffs = tuple(p.terms.get((k,), base.zero()) for k in range(deg))
    try:
        return FieldSpec(base.characteristic, coeffs)
    except ValueError as exc:
        raise ParseError(f"line {lineno}: {exc}") from None


def _fold_extension_var(p: Poly, target: RingCtx) -> Poly:
    """Rewrite a polynomial parsed with ``th`` as the leading variable
    into one over the extension field, absorbing th powers into the
    coefficients."""
    field = target.field
    gen = field.generator()
    items = []
    for mono, c in p.terms.items():
        k = mono[0]
        items.append((mono[1:], field.mul(c, field.pow(gen, k)) if k else c))
    return Poly.from_items(items, target)


def parse_ideal_text(text: str,
                     char_override: Optional[int] = None) -> IdealHandle:
    """Parse the line-oriented ideal format into an ideal handle."""
    char: Optional[int] = None
    ext: Optional[Tuple[int, str]] = None
    names: Optional[tuple] = None
    gen_lines: List[Tuple[int, str]] = []
    in_ideal = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_ideal:
            gen_lines.append((lineno, line))
            continue
        if line == "ideal:":
            in_ideal = True
            continue
        head, _, rest = line.partition(" ")
        if head == "char":
            char = _parse_char(rest, lineno)
        elif head == "ext":
            ext = (lineno, rest.strip())
        elif head == "vars":
            names = tuple(rest.replace(",", " ").split())
        else:
            raise ParseError(
                f"line {lineno}: expected char/ext/vars/ideal:, got {line!r}")
    if char_override is not None:
        char = char_override
    if char is None:
        raise ParseError("missing 'char <n>' line")
    if not names:
        raise ParseError("missing 'vars <names>' line")
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable names")
    if not gen_lines:
        raise ParseError("missing 'ideal:' section with generators")
    try:
        field = FieldSpec(char)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if ext is not None:
        if _EXT_NAME in names:
            raise ParseError(
                f"variable name {_EXT_NAME!r} is reserved by the ext line")
        field = _extension_field(field, ext[1], ext[0])
    ctx = RingCtx(field, names)
    parse_ctx = RingCtx(field, (_EXT_NAME,) + names) if ext else ctx
    gens = []
    for lineno, line in gen_lines:
        try:
            p = parse_poly(line, parse_ctx)
        except AlgebroidError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if ext is not None:
            p = _fold_extension_var(p, ctx)
        if not p.is_zero():
            gens.append(p)
    if not gens:
        raise ParseError("the ideal has no nonzero generator")
    return IdealHandle(gens, ctx)


def load_ideal_file(path: str,
                    char_override: Optional[int] = None) -> IdealHandle:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ideal_text(fh.read(), char_override=char_override)


# ------------------------------------------------------------ JSON codec

def _coeff_json(field: FieldSpec, c):
    if field.extension is not None:
        return [_coeff_json(field.base(), x) for x in c]
    return str(c)


def _coeff_parse(field: FieldSpec, obj):
    if field.extension is not None:
        vec = tuple(_coeff_parse(field.base(), x) for x in obj)
        if len(vec) != field.degree:
            raise ParseError("extension coefficient has the wrong length")
        return vec
    q = Fraction(obj)
    return field.coerce(int(q) if q.denominator == 1 else q)


def _poly_json(p: Poly) -> dict:
    field = p.ctx.field
    return {
        "text": str(p),
        "terms": [[list(m), _coeff_json(field, c)]
                  for m, c in sorted(p.terms.items())],
    }


def _poly_parse(obj: dict, ctx: RingCtx) -> Poly:
    items = []
    for mono, coeff in obj["terms"]:
        m = tuple(int(e) for e in mono)
        if len(m) != ctx.nvars or any(e < 0 for e in m):
            raise ParseError(f"bad exponent vector {mono!r}")
        items.append((m, _coeff_parse(ctx.field, coeff)))
    return Poly.from_items(items, ctx)


def _ring_json(ctx: RingCtx) -> dict:
    field = ctx.field
    return {
        "char": field.characteristic,
        "vars": list(ctx.variables),
        "ext": (None if field.extension is None
                else [_coeff_json(field.base(), c) for c in field.extension]),
    }


def _ring_parse(obj: dict) -> RingCtx:
    char = int(obj["char"])
    ext = obj.get("ext")
    if ext is not None:
        base = FieldSpec(char)
        ext = tuple(_coeff_parse(base, c) for c in ext)
    try:
        field = FieldSpec(char, ext)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return RingCtx(field, tuple(str(v) for v in obj["vars"]))


def _data_json(cert: Certificate):
    if cert.kind == "prime_tropism":
        return [int(e) for e in cert.data]
    if cert.kind == "monomial_witness":
        return _poly_json(cert.data)
    if cert.kind == "two_tropisms":
        return [[int(e) for e in ray] for ray in cert.data]
    raise ParseError(f"unknown certificate kind {cert.kind!r}")


def certificate_json(cert: Certificate) -> dict:
    return {
        "kind": cert.kind,
        "ring": _ring_json(cert.ideal.ctx),
        "generators": [_poly_json(g) for g in cert.ideal.generators],
        "data": _data_json(cert),
        "base_vars": list(cert.base_vars),
        "transcript": [{"name": name, "poly": _poly_json(f)}
                       for name, f in cert.transcript],
    }


def report_json(report: DecisionReport) -> dict:
    stats = {}
    for key, value in report.stats.items():
        if key == "weight_history":
            stats[key] = [list(w) for w in value]
        elif isinstance(value, tuple):
            stats[key] = list(value)
        else:
            stats[key] = value
    return {
        "verdict": report.verdict,
        "certificate": certificate_json(report.certificate),
        "stats": stats,
    }


def certificate_from_json(doc: dict) -> Certificate:
    """Rebuild a certificate from a decision report document (or from a
    bare certificate object)."""
    try:
        cert = doc.get("certificate", doc)
        ctx = _ring_parse(cert["ring"])
        handle = IdealHandle([_poly_parse(g, ctx)
                              for g in cert["generators"]], ctx)
        kind = str(cert["kind"])
        if kind == "prime_tropism":
            data = tuple(int(e) for e in cert["data"])
        elif kind == "monomial_witness":
            data = _poly_parse(cert["data"], ctx)
        elif kind == "two_tropisms":
            data = tuple(tuple(int(e) for e in ray) for ray in cert["data"])
        else:
            data = cert["data"]
        transcript = tuple((str(t["name"]), _poly_parse(t["poly"], ctx))
                           for t in cert.get("transcript", ()))
        base_vars = cert.get("base_vars")
        if base_vars is None:
            base_vars = ctx.variables[:ctx.nvars - len(transcript)]
        return Certificate(kind, handle, data, tuple(base_vars), transcript)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed certificate document: {exc}") from None


_KIND_VERDICT = {
    "prime_tropism": "irreducible",
    "monomial_witness": "reducible",
    "two_tropisms": "reducible",
}


# ------------------------------------------------------------- commands

def _parse_weights(text: str, nvars: int) -> tuple:
    parts = text.replace(",", " ").split()
    try:
        w = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"weights must be integers: {text!r}") from None
    if len(w) != nvars:
        raise ParseError(f"expected {nvars} weights, got {len(w)}")
    if any(e <= 0 for e in w):
        raise ParseError("weights must be positive")
    return w


def _ring_line(ctx: RingCtx) -> str:
    return (f"ring: char {ctx.field.characteristic}, "
            f"vars {' '.join(ctx.variables)}")


def _print_report(report: DecisionReport) -> None:
    cert = report.certificate
    print(f"verdict: {report.verdict}")
    print(f"certificate: {cert.kind}")
    if cert.kind == "prime_tropism":
        print("tropism: " + " ".join(str(e) for e in cert.data))
    elif cert.kind == "monomial_witness":
        print(f"witness: {cert.data}")
    else:
        for ray in cert.data:
            print("ray: " + " ".join(str(e) for e in ray))
    print(_ring_line(cert.ideal.ctx))
    for name, f in cert.transcript:
        print(f"adjoined: {name} = {f}")
    shown = sorted(k for k in report.stats if k != "weight_history")
    print("stats: " + " ".join(f"{k}={report.stats[k]}" for k in shown))


def cmd_decide(args: argparse.Namespace) -> int:
    handle = load_ideal_file(args.path, char_override=args.char_override)
    handle = assert_preconditions(handle)
    report = decide_irreducible(handle, iter_cap=args.iter_cap,
                                trunc_cap=args.trunc_cap)
    if args.verify:
        ok, reason = verify_certificate(report.certificate)
        if not ok:
            print(f"error: certificate failed verification: {reason}",
                  file=sys.stderr)
            return 2
        print("certificate re-checked: ok", file=sys.stderr)
    if args.json:
        print(json.dumps(report_json(report), indent=2))
    else:
        _print_report(report)
    return 0 if report.verdict == "irreducible" else 1


def _minimal_generators(w: tuple) -> tuple:
    uniq = sorted({int(e) for e in w})
    kept = []
    for n in uniq:
        others = tuple(m for m in uniq if m != n)
        if others and membership(n, others) is not None:
            continue
        kept.append(n)
    return tuple(kept)


def cmd_semigroup(args: argparse.Namespace) -> int:
    handle = assert_preconditions(load_ideal_file(args.path))
    final, w = value_semigroup(handle)
    print("weights: " + " ".join(str(e) for e in w))
    print("generators: " + " ".join(str(e) for e in _minimal_generators(w)))
    print(f"conductor: {conductor(w)}")
    print(_ring_line(final.ctx))
    return 0


def cmd_int(args: argparse.Namespace) -> int:
    handle = load_ideal_file(args.path)
    f = parse_poly(args.poly, handle.ctx)
    n = intersection_number(f, handle)
    print("infinite" if n == INF else str(n))
    return 0


def cmd_initial(args: argparse.Namespace) -> int:
    handle = load_ideal_file(args.path)
    w = _parse_weights(args.weights, handle.ctx.nvars)
    for g in initial_ideal(handle, w):
        print(str(g))
    return 0


def cmd_tropism(args: argparse.Namespace) -> int:
    handle = load_ideal_file(args.path)
    w = _parse_weights(args.weights, handle.ctx.nvars)
    if gcd_weights(w) != 1:
        print("tropism: false")
        print(f"reason: weights share the factor {gcd_weights(w)}")
        return 0
    witness = _monomial_witness(handle, w)
    if witness is None:
        print("tropism: true")
    else:
        print("tropism: false")
        print(f"witness: {witness}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    with open(args.path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not valid JSON: {exc}") from None
    cert = certificate_from_json(doc)
    ok, reason = verify_certificate(cert)
    claimed = doc.get("verdict") if isinstance(doc, dict) else None
    if ok and claimed is not None and claimed != _KIND_VERDICT[cert.kind]:
        ok, reason = False, "the claimed verdict does not match the kind"
    if ok:
        print(f"certificate: ok ({cert.kind})")
        return 0
    print(f"certificate: invalid ({reason})")
    return 1


# ------------------------------------------------------------ entry point

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algebroid",
        description="Irreducibility decisions for algebroid curve ideals "
                    "with machine-checkable certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide",
                       help="decide irreducibility (exit 0 yes, 1 no)")
    p.add_argument("path", help="ideal file")
    p.add_argument("--json", action="store_true",
                   help="emit the full report as JSON on stdout")
    p.add_argument("--verify", action="store_true",
                   help="re-check the certificate before reporting")
    p.add_argument("--trunc-cap", type=int, default=None, metavar="N",
                   help="cap on truncation orders in the pencil tests")
    p.add_argument("--iter-cap", type=int, default=256, metavar="N",
                   help="cap on loop rounds (guards non-radical input)")
    p.add_argument("--char-override", type=int, default=None, metavar="P",
                   help="replace the char declared in the file")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("semigroup",
                       help="value semigroup of a prime curve ideal")
    p.add_argument("path", help="ideal file")
    p.set_defaults(func=cmd_semigroup)

    p = sub.add_parser("int",
                       help="intersection number of a polynomial")
    p.add_argument("path", help="ideal file")
    p.add_argument("--poly", required=True, metavar="EXPR",
                   help="polynomial in the file's variables")
    p.set_defaults(func=cmd_int)

    p = sub.add_parser("initial",
                       help="weighted initial ideal generators")
    p.add_argument("path", help="ideal file")
    p.add_argument("--weights", required=True, metavar="W",
                   help="comma or space separated positive integers")
    p.set_defaults(func=cmd_initial)

    p = sub.add_parser("tropism",
                       help="test whether a weight vector is a tropism")
    p.add_argument("path", help="ideal file")
    p.add_argument("--weights", required=True, metavar="W",
                   help="comma or space separated positive integers")
    p.set_defaults(func=cmd_tropism)

    p = sub.add_parser("verify",
                       help="re-check an emitted JSON report "
                            "(exit 0 valid, 1 invalid)")
    p.add_argument("path", help="JSON report file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AlgebroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
