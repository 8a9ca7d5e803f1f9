"""Sparse multivariate polynomials over a FieldSpec, term orders, weighted
orders and initial forms.

Monomials are exponent tuples, polynomials are dicts from monomial to
coefficient payload.  Weight vectors may contain ``INF`` entries; a term
with a positive exponent in an INF slot has weighted degree INF.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import ParseError, ZeroPoly
from .scalars import FieldSpec, Scalar

INF = float("inf")

Monomial = tuple
WeightVec = tuple


# ---------------------------------------------------------------- monomials

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_deg(a: Monomial) -> int:
    return sum(a)


def wdot(w: WeightVec, a: Monomial):
    """Weighted degree of a monomial; INF entries count only on positive
    exponents."""
    total = 0
    for wi, ai in zip(w, a):
        if ai == 0:
            continue
        if wi is INF or wi == INF:
            return INF
        total += wi * ai
    return total


# -------------------------------------------------------------- term orders

class TermOrder:
    """A monomial order given by a sort key: larger key = larger monomial."""

    def key(self, mono: Monomial):
        raise NotImplementedError

    def cache_key(self):
        return repr(self)


@dataclass(frozen=True)
class Lex(TermOrder):
    def key(self, mono):
        return mono


@dataclass(frozen=True)
class DegRevLex(TermOrder):
    def key(self, mono):
        return (sum(mono), tuple(-e for e in reversed(mono)))


@dataclass(frozen=True)
class WeightedOrder(TermOrder):
    """Compare by weighted degree first, break ties with another order."""

    weights: tuple
    tie: TermOrder = DegRevLex()

    def key(self, mono):
        return (wdot(self.weights, mono), self.tie.key(mono))


@dataclass(frozen=True)
class BlockOrder(TermOrder):
    """First ``split`` variables are compared with ``front`` and dominate;
    the rest are compared with ``back``."""

    split: int
    front: TermOrder = DegRevLex()
    back: TermOrder = DegRevLex()

    def key(self, mono):
        return (self.front.key(mono[: self.split]),
                self.back.key(mono[self.split:]))


@dataclass(frozen=True)
class HomogenizedLocalOrder(TermOrder):
    """Global order on K[x_1..x_n, h] (h last) whose leading terms, after
    setting h = 1 on a w-homogenized polynomial, realize the local order
    'smallest w-degree first, degrevlex among equals'."""

    weights: tuple  # positive integer weights for the x-variables only

    def key(self, mono):
        a, c = mono[:-1], mono[-1]
        wa = 0
        for wi, ai in zip(self.weights, a):
            wa += wi * ai
        return (wa + c, -wa, (sum(a), tuple(-e for e in reversed(a))))


# ------------------------------------------------------------------- ring

@dataclass(frozen=True)
class RingCtx:
    """A polynomial ring: a coefficient field and named variables."""

    field: FieldSpec
    variables: tuple

    def __post_init__(self):
        names = tuple(str(v) for v in self.variables)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for n in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
                raise ValueError(f"bad variable name {n!r}")
        object.__setattr__(self, "variables", names)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r}") from None

    def zero(self) -> "Poly":
        return Poly({}, self)

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return Poly({}, self)
        return Poly({(0,) * self.nvars: c}, self)

    def var(self, which: Union[int, str]) -> "Poly":
        i = which if isinstance(which, int) else self.index(which)
        e = [0] * self.nvars
        e[i] = 1
        return Poly({tuple(e): self.field.one()}, self)

    def mono(self, exps: Sequence[int], coeff=1) -> "Poly":
        c = self.field.coerce(coeff)
        if self.field.is_zero(c):
            return Poly({}, self)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector")
        return Poly({tuple(int(e) for e in exps): c}, self)

    def poly(self, text: str) -> "Poly":
        return parse_poly(text, self)

    def extend(self, names: Iterable[str]) -> "RingCtx":
        return RingCtx(self.field, self.variables + tuple(names))

    def __str__(self):
        return f"{self.field}[{', '.join(self.variables)}]"


class Poly:
    """Immutable-in-spirit sparse polynomial; do not mutate ``terms``."""

    __slots__ = ("terms", "ctx")

    def __init__(self, terms: dict, ctx: RingCtx):
        self.terms = terms
        self.ctx = ctx

    # construction helpers -------------------------------------------------

    @staticmethod
    def from_items(items, ctx: RingCtx) -> "Poly":
        field = ctx.field
        acc = {}
        for mono, c in items:
            if mono in acc:
                c = field.add(acc[mono], c)
            if field.is_zero(c):
                acc.pop(mono, None)
            else:
                acc[mono] = c
        return Poly(acc, ctx)

    # queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPoly("degree of the zero polynomial")
        return max(sum(m) for m in self.terms)

    def lead(self, order: TermOrder):
        """(monomial, coefficient) of the order-largest term."""
        if not self.terms:
            raise ZeroPoly("leading term of the zero polynomial")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def coeff(self, mono: Monomial):
        return self.terms.get(tuple(mono), self.ctx.field.zero())

    def constant_coeff(self):
        return self.coeff((0,) * self.ctx.nvars)

    def key(self):
        """Canonical hashable form, for caching and set membership."""
        fld = self.ctx.field
        return tuple(sorted((m, fld.sort_key(c)) for m, c in self.terms.items()))

    def variables_used(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    # arithmetic ------------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.ctx != other.ctx:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        other = self._coerce_operand(other)
        self._check(other)
        field = self.ctx.field
        big, small = (self.terms, other.terms)
        out = dict(big)
        for m, c in small.items():
            if m in out:
                s = field.add(out[m], c)
                if field.is_zero(s):
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return Poly(out, self.ctx)

    def __neg__(self):
        field = self.ctx.field
        return Poly({m: field.neg(c) for m, c in self.terms.items()}, self.ctx)

    def __sub__(self, other):
        other = self._coerce_operand(other)
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce_operand(other) - self

    __radd__ = __add__

    def __mul__(self, other):
        other = self._coerce_operand(other)
        self._check(other)
        field = self.ctx.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = field.mul(c1, c2)
                if m in out:
                    c = field.add(out[m], c)
                if field.is_zero(c):
                    out.pop(m, None)
                else:
                    out[m] = c
        return Poly(out, self.ctx)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = self.ctx.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "Poly":
        field = self.ctx.field
        c = field.coerce(c)
        if field.is_zero(c):
            return self.ctx.zero()
        return Poly({m: field.mul(c, v) for m, v in self.terms.items()}, self.ctx)

    def term_mul(self, mono: Monomial, coeff) -> "Poly":
        """Multiply by coeff * x^mono."""
        field = self.ctx.field
        coeff = field.coerce(coeff)
        if field.is_zero(coeff):
            return self.ctx.zero()
        return Poly({mono_mul(m, mono): field.mul(c, coeff)
                     for m, c in self.terms.items()}, self.ctx)

    def monic(self, order: TermOrder) -> "Poly":
        if not self.terms:
            return self
        _, c = self.lead(order)
        return self.scale(self.ctx.field.inv(c))

    def _coerce_operand(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, Scalar, tuple)):
            return self.ctx.const(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        if set(self.terms) != set(other.terms):
            return False
        fld = self.ctx.field
        return all(fld.eq(c, other.terms[m]) for m, c in self.terms.items())

    def __hash__(self):
        return hash((self.ctx, self.key()))

    # substitution ----------------------------------------------------------

    def subs(self, mapping: dict) -> "Poly":
        """Substitute polynomials for variables; keys are names or indices.
        Unmapped variables stay themselves."""
        ctx = self.ctx
        images = []
        target_ctx = None
        for img in mapping.values():
            if isinstance(img, Poly):
                target_ctx = img.ctx
                break
        target_ctx = target_ctx or ctx
        for i in range(ctx.nvars):
            images.append(None)
        for k, img in mapping.items():
            i = k if isinstance(k, int) else ctx.index(k)
            if not isinstance(img, Poly):
                img = target_ctx.const(img)
            images[i] = img
        for i in range(ctx.nvars):
            if images[i] is None:
                images[i] = target_ctx.var(ctx.variables[i])
        out = target_ctx.zero()
        for m, c in self.terms.items():
            piece = target_ctx.const(c)
            for i, e in enumerate(m):
                if e:
                    piece = piece * images[i] ** e
            out = out + piece
        return out

    # display ---------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ctx.field
        names = self.ctx.variables
        order = sorted(self.terms, key=lambda m: (sum(m), m), reverse=True)
        parts = []
        for m in order:
            c = self.terms[m]
            factors = []
            for n, e in zip(names, m):
                if e == 1:
                    factors.append(n)
                elif e > 1:
                    factors.append(f"{n}^{e}")
            cs = field.payload_str(c)
            neg = cs.startswith("-")
            if neg and not cs.startswith("-("):
                cs = cs[1:]
                sign = "-"
            else:
                sign = "+"
            if not factors:
                body = cs
            elif cs == "1":
                body = "*".join(factors)
            else:
                body = "*".join([cs] + factors)
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


# --------------------------------------------------------- ring morphisms

def embed(f: Poly, target: RingCtx) -> Poly:
    """Reinterpret f inside a ring whose leading variables extend f's ring."""
    src = f.ctx
    if target.variables[: src.nvars] != src.variables or target.field != src.field:
        raise ValueError("target ring does not extend the source ring")
    pad = target.nvars - src.nvars
    return Poly({m + (0,) * pad: c for m, c in f.terms.items()}, target)


def project(f: Poly, target: RingCtx, keep) -> Poly:
    """Keep only the listed variable positions (which must carry every
    exponent of f) and reinterpret in the smaller ring."""
    keep = list(keep)
    out = {}
    for m, c in f.terms.items():
        for i, e in enumerate(m):
            if e and i not in keep:
                raise ValueError("polynomial uses a dropped variable")
        out[tuple(m[i] for i in keep)] = c
    return Poly(out, target)


# ------------------------------------------------- weighted initial forms

def ord_w(f: Poly, w: WeightVec):
    """Smallest weighted degree of a term of f; INF for the zero polynomial."""
    if not f.terms:
        return INF
    return min(wdot(w, m) for m in f.terms)


def in_w(f: Poly, w: WeightVec) -> Poly:
    """Sum of the terms of minimal weighted degree."""
    if not f.terms:
        return f
    o = ord_w(f, w)
    return Poly({m: c for m, c in f.terms.items() if wdot(w, m) == o}, f.ctx)


# ------------------------------------------------------ division algorithm

def division(f: Poly, divisors: Sequence[Poly], order: TermOrder,
             with_quotients: bool = False):
    """Multivariate division by an ordered list under a global order.

    Returns the remainder, or (quotients, remainder) when requested; no
    remainder term is divisible by any divisor's leading monomial.
    """
    ctx = f.ctx
    field = ctx.field
    leads = [g.lead(order) for g in divisors]
    quots = [dict() for _ in divisors] if with_quotients else None
    rem = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        for i, (lm, lc) in enumerate(leads):
            q = mono_div(m, lm)
            if q is None:
                continue
            factor = field.div(c, lc)
            if with_quotients:
                prev = quots[i].get(q, field.zero())
                s = field.add(prev, factor)
                if field.is_zero(s):
                    quots[i].pop(q, None)
                else:
                    quots[i][q] = s
            for gm, gc in divisors[i].terms.items():
                if gm == lm:
                    continue
                t = mono_mul(gm, q)
                v = field.sub(work.get(t, field.zero()),
                              field.mul(factor, gc))
                if field.is_zero(v):
                    work.pop(t, None)
                else:
                    work[t] = v
            break
        else:
            rem[m] = c
    remainder = Poly(rem, ctx)
    if with_quotients:
        return [Poly(q, ctx) for q in quots], remainder
    return remainder


def normal_form(f: Poly, divisors: Sequence[Poly], order: TermOrder) -> Poly:
    return division(f, divisors, order)


# ------------------------------------------------------------------ parser

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_]*|\*\*|[-+*/^()])")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"bad character at {text[pos:pos + 8]!r}")
        tok = m.group(1)
        toks.append("^" if tok == "**" else tok)
        pos = m.end()
    return toks


def parse_poly(text: str, ctx: RingCtx) -> Poly:
    """Parse '+ - * / ^' arithmetic with implicit multiplication, integer
    and fractional coefficients, and parentheses."""
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        return tok

    def parse_expr() -> Poly:
        sign = 1
        while peek() in ("+", "-"):
            if take() == "-":
                sign = -sign
        acc = parse_term()
        if sign < 0:
            acc = -acc
        while peek() in ("+", "-"):
            op = take()
            t = parse_term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def parse_term() -> Poly:
        acc = parse_factor()
        while True:
            nxt = peek()
            if nxt == "*":
                take()
                acc = acc * parse_factor()
            elif nxt == "/":
                take()
                d = parse_factor()
                if not d.is_constant():
                    raise ParseError("division only by constants")
                if d.is_zero():
                    raise ParseError("division by zero")
                acc = acc.scale(ctx.field.inv(d.constant_coeff()))
            elif nxt is not None and (nxt.isdigit() or nxt == "("
                                      or re.fullmatch(r"[A-Za-z_]\w*", nxt)):
                acc = acc * parse_factor()
            else:
                return acc

    def parse_factor() -> Poly:
        base = parse_base()
        if peek() == "^":
            take()
            neg = False
            while peek() in ("+", "-"):
                if take() == "-":
                    neg = not neg
            e = peek()
            if e is None or not e.isdigit():
                raise ParseError("exponent must be an integer")
            take()
            if neg:
                raise ParseError("negative exponents are not allowed")
            return base ** int(e)
        return base

    def parse_base() -> Poly:
        tok = peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        if tok == "(":
            take()
            inner = parse_expr()
            if peek() != ")":
                raise ParseError("missing closing parenthesis")
            take()
            return inner
        if tok == "-":
            take()
            return -parse_base()
        if tok.isdigit():
            take()
            return ctx.const(int(tok))
        if re.fullmatch(r"[A-Za-z_]\w*", tok):
            take()
            return ctx.var(ctx.index(tok))
        raise ParseError(f"unexpected token {tok!r}")

    result = parse_expr()
    if pos != len(toks):
        raise ParseError(f"trailing input near {toks[pos]!r}")
    return result
