"""Exact multivariate polynomials over Q and monomial orders.

Monomials are plain tuples of non-negative exponents (one entry per ring
variable).  Coefficients are ``int`` when integral and ``Fraction``
otherwise, so the common case of +-1 binomials never pays for Fraction
arithmetic while staying exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .errors import DimensionError, ParseError, ZeroInputError

Monomial = Tuple[int, ...]
Coefficient = Union[int, Fraction]


def normalize_coeff(c) -> Coefficient:
    """Canonical exact coefficient: ``int`` if integral, reduced ``Fraction`` otherwise."""
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed")
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def exact_div(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return normalize_coeff(Fraction(a) / Fraction(b))


# ---------------------------------------------------------------------------
# Rings and orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring over Q with an ordered tuple of named variables."""

    num_vars: int
    variable_names: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.num_vars < 1:
            raise DimensionError("a ring needs at least one variable")
        if not self.variable_names:
            names = tuple(f"x{i}" for i in range(1, self.num_vars + 1))
            object.__setattr__(self, "variable_names", names)
        if len(self.variable_names) != self.num_vars:
            raise DimensionError("variable_names length does not match num_vars")
        if len(set(self.variable_names)) != self.num_vars:
            raise DimensionError("duplicate variable names")

    @classmethod
    def scroll(cls, n: int) -> "PolyRing":
        """The ring K[x_1, ..., x_{n+1}] carrying ideals of graphs on [n]."""
        if n < 1:
            raise DimensionError("need n >= 1")
        return cls(n + 1)

    def extended(self, name: str = "t") -> "PolyRing":
        """New ring with an auxiliary variable prepended at position 0."""
        return PolyRing(self.num_vars + 1, (name,) + self.variable_names)

    def drop_leading(self, k: int) -> "PolyRing":
        return PolyRing(self.num_vars - k, self.variable_names[k:])

    def index(self, name: str) -> int:
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r}") from None

    def one(self) -> "Polynomial":
        return Polynomial(self, {self.unit(): 1})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def unit(self) -> Monomial:
        return (0,) * self.num_vars

    def gen(self, k: int) -> "Polynomial":
        """Variable at 0-based position ``k``."""
        if not 0 <= k < self.num_vars:
            raise DimensionError(f"variable position {k} out of range")
        e = [0] * self.num_vars
        e[k] = 1
        return Polynomial(self, {tuple(e): 1})

    def x(self, i: int) -> "Polynomial":
        """The variable named ``x<i>`` (1-based, as written in formulas)."""
        return self.gen(self.index(f"x{i}"))

    def monomial(self, exps: Sequence[int], coeff: Coefficient = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.num_vars:
            raise DimensionError("exponent vector length does not match ring")
        return Polynomial(self, {exps: coeff})

    def __str__(self):
        return "Q[" + ",".join(self.variable_names) + "]"


def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """Total monomial order: ``grevlex``, ``lex`` or block ``elim`` with ``block`` leading variables.

    ``key(m)`` maps monomials to tuples whose natural ordering is the monomial
    order, so larger key means larger monomial.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs block >= 1")

    def key(self, m: Monomial):
        if self.kind == "grevlex":
            return _grevlex_key(m)
        if self.kind == "lex":
            return m
        k = self.block
        return (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination(k: int) -> MonomialOrder:
    """Block order ranking monomials that involve the first ``k`` variables highest."""
    return MonomialOrder("elim", k)


def monomial_compare(u: Monomial, v: Monomial, order: MonomialOrder = GREVLEX) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    if len(u) != len(v):
        raise DimensionError("monomials from rings of different sizes")
    ku, kv = order.key(tuple(u)), order.key(tuple(v))
    return (ku > kv) - (ku < kv)


# monomial helpers ----------------------------------------------------------


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial: a map monomial -> nonzero exact coefficient."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, Coefficient] | None = None):
        clean: Dict[Monomial, Coefficient] = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != ring.num_vars:
                    raise DimensionError("exponent vector length does not match ring")
                if any(e < 0 for e in m):
                    raise ValueError("negative exponent")
                c = normalize_coeff(c)
                if c:
                    clean[m] = c
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: PolyRing, terms: Dict[Monomial, Coefficient]) -> "Polynomial":
        # trusted constructor for already-clean term maps
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, ring: PolyRing, c: Coefficient) -> "Polynomial":
        return cls(ring, {ring.unit(): c})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def support(self) -> set:
        """0-based positions of variables that occur in some term."""
        return {k for m in self.terms for k, e in enumerate(m) if e}

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def leading_term(self, order: MonomialOrder = GREVLEX) -> Tuple[Monomial, Coefficient]:
        if not self.terms:
            raise ZeroInputError("leading term of the zero polynomial")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring.num_vars != other.ring.num_vars:
            raise DimensionError("polynomials from rings of different sizes")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = normalize_coeff(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Coefficient] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Coefficient) -> "Polynomial":
        c = normalize_coeff(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: normalize_coeff(v * c) for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c: Coefficient = 1) -> "Polynomial":
        return Polynomial._raw(
            self.ring, {mono_mul(m, mono): normalize_coeff(v * c) for m, v in self.terms.items()}
        )

    def make_monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            raise ZeroInputError("make_monic of the zero polynomial")
        _, lc = self.leading_term(order)
        if lc == 1:
            return self
        return Polynomial._raw(self.ring, {m: exact_div(c, lc) for m, c in self.terms.items()})

    # -- structure ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.num_vars == other.ring.num_vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def evaluate(self, point: Sequence[int], modulus: int | None = None):
        """Value at ``point``; reduced mod ``modulus`` when given (coefficients must be integral)."""
        if len(point) != self.ring.num_vars:
            raise DimensionError("point has wrong length")
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x**e
            total += v
        if modulus is not None:
            if isinstance(total, Fraction):
                raise ValueError("non-integral coefficients cannot be reduced mod q")
            total %= modulus
        return total

    def lift(self, ring: PolyRing, offset: int) -> "Polynomial":
        """Embed into ``ring`` by shifting variable positions by ``offset``."""
        if ring.num_vars < offset + self.ring.num_vars:
            raise DimensionError("target ring too small")
        pad_front = (0,) * offset
        pad_back = (0,) * (ring.num_vars - offset - self.ring.num_vars)
        return Polynomial._raw(ring, {pad_front + m + pad_back: c for m, c in self.terms.items()})

    def drop(self, ring: PolyRing, k: int) -> "Polynomial":
        """Restrict to ``ring`` by deleting the first ``k`` (unused) variables."""
        if any(any(m[:k]) for m in self.terms):
            raise DimensionError("polynomial involves variables being dropped")
        return Polynomial._raw(ring, {m[k:]: c for m, c in self.terms.items()})

    def render(self, order: MonomialOrder = GREVLEX) -> str:
        return render(self, order)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Polynomial({render(self)!r})"


# module-level API -----------------------------------------------------------


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f * g


def poly_scale(f: Polynomial, c: Coefficient) -> Polynomial:
    return f.scale(c)


def make_monic(f: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    return f.make_monic(order)


def leading_term(f: Polynomial, order: MonomialOrder = GREVLEX) -> Tuple[Monomial, Coefficient]:
    return f.leading_term(order)


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------


def _render_coeff(c: Coefficient) -> str:
    return str(c)


def render_monomial(m: Monomial, ring: PolyRing) -> str:
    parts = []
    for name, e in zip(ring.variable_names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(f: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text: terms descending under ``order``, reduced-fraction coefficients."""
    if not f.terms:
        return "0"
    out = []
    for idx, (m, c) in enumerate(f.sorted_terms(order)):
        neg = c < 0
        a = -c if neg else c
        mono = render_monomial(m, f.ring)
        if not mono:
            body = _render_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_render_coeff(a)}*{mono}"
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z]\w*)|(?P<op>[-+*^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at position {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    return tokens


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``term ((+|-) term)*`` where term = ``[coeff*] var[^exp] (*var[^exp])*``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def factor(exps):
        kind, val = take()
        if kind != "var":
            raise ParseError(f"expected variable, got {val!r}")
        k = ring.index(val)
        e = 1
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num" or "/" in val:
                raise ParseError("exponent must be a non-negative integer")
            e = int(val)
        exps[k] += e

    def term():
        coeff: Coefficient = 1
        exps = [0] * ring.num_vars
        kind, val = peek()
        if kind == "num":
            take()
            coeff = normalize_coeff(Fraction(val))
            if peek() != ("op", "*"):
                return tuple(exps), coeff
            take()
        factor(exps)
        while peek() == ("op", "*"):
            take()
            factor(exps)
        return tuple(exps), coeff

    terms: Dict[Monomial, Coefficient] = {}
    sign = 1
    if peek() in (("op", "-"), ("op", "+")):
        sign = -1 if take()[1] == "-" else 1
    while True:
        m, c = term()
        terms[m] = terms.get(m, 0) + sign * c
        if pos == len(tokens):
            break
        kind, val = take()
        if kind != "op" or val not in "+-":
            raise ParseError(f"expected + or -, got {val!r}")
        sign = -1 if val == "-" else 1
    return Polynomial(ring, terms)


def polynomials_from_strings(texts: Iterable[str], ring: PolyRing):
    return [parse_polynomial(t, ring) for t in texts]
