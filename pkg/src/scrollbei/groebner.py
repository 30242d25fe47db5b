"""Buchberger's algorithm and the ideal operations built on it.

All routines are pure functions of their inputs.  Internally polynomials are
handled as ``{monomial: coefficient}`` dicts; the public surface speaks
:class:`~scrollbei.polynomial.Polynomial`, :class:`Ideal` and
:class:`GroebnerBasis`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DimensionError, ZeroInputError
from .monomial_ideal import MonomialIdeal
from .polynomial import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    PolyRing,
    Polynomial,
    elimination,
    exact_div,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    normalize_coeff,
)

Terms = Dict[Monomial, object]


@dataclass(frozen=True)
class Ideal:
    """An ideal given by generators.  An empty generator list is the zero ideal."""

    ring: PolyRing
    generators: Tuple[Polynomial, ...] = ()

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if g.ring.num_vars != self.ring.num_vars:
                raise DimensionError("generator from a different ring")
            if g:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.ring.num_vars != other.ring.num_vars:
            raise DimensionError("ideals from rings of different sizes")
        return Ideal(self.ring, self.generators + other.generators)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic elements sorted by descending leading monomial."""

    ring: PolyRing
    order: MonomialOrder
    elements: Tuple[Polynomial, ...]

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].degree() == 0

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.elements, self.order)

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def as_ideal(self) -> Ideal:
        return Ideal(self.ring, self.elements)


# ---------------------------------------------------------------------------
# dict-level kernels
# ---------------------------------------------------------------------------


class _Elem:
    __slots__ = ("lm", "lc", "terms")

    def __init__(self, lm, lc, terms):
        self.lm = lm
        self.lc = lc
        self.terms = terms


def _elem(terms: Terms, key) -> _Elem:
    lm = max(terms, key=key)
    return _Elem(lm, terms[lm], terms)


def _monic(terms: Terms, key) -> Terms:
    lm = max(terms, key=key)
    lc = terms[lm]
    if lc == 1:
        return terms
    return {m: exact_div(c, lc) for m, c in terms.items()}


def _sub_multiple(p: Terms, g: Terms, q: Monomial, a) -> None:
    """p -= a * q * g, in place."""
    for gm, gc in g.items():
        t = mono_mul(gm, q)
        v = p.get(t, 0) - a * gc
        if v:
            p[t] = normalize_coeff(v)
        else:
            p.pop(t, None)


def _spoly(f: _Elem, g: _Elem) -> Terms:
    lcm = mono_lcm(f.lm, g.lm)
    p: Terms = {}
    qf = mono_div(lcm, f.lm)
    for m, c in f.terms.items():
        p[mono_mul(m, qf)] = exact_div(c, f.lc)
    _sub_multiple(p, g.terms, mono_div(lcm, g.lm), exact_div(1, g.lc))
    return p


def _reduce(f: Terms, basis: Sequence[_Elem], key, record: Optional[List[Terms]] = None) -> Terms:
    """Full multivariate division of ``f`` by ``basis``; returns the remainder."""
    p = dict(f)
    rem: Terms = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for idx, b in enumerate(basis):
            if mono_divides(b.lm, m):
                q = mono_div(m, b.lm)
                a = exact_div(c, b.lc)
                _sub_multiple(p, b.terms, q, a)
                if record is not None:
                    rq = record[idx]
                    v = rq.get(q, 0) + a
                    if v:
                        rq[q] = normalize_coeff(v)
                    else:
                        rq.pop(q, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _is_unit(terms: Terms) -> bool:
    return len(terms) == 1 and not any(next(iter(terms)))


def _buchberger(polys: Sequence[Terms], order: MonomialOrder, stop_on_unit: bool = False) -> List[Terms]:
    key = order.key
    G: List[_Elem] = []
    pending = set()
    heap: list = []

    def add(h: Terms):
        e = _elem(_monic(h, key), key)
        j = len(G)
        G.append(e)
        for i in range(j):
            lcm = mono_lcm(G[i].lm, e.lm)
            pending.add((i, j))
            heapq.heappush(heap, (sum(lcm), key(lcm), i, j))

    for f in sorted(polys, key=lambda t: key(max(t, key=key))):
        h = _reduce(f, G, key)
        if h:
            if stop_on_unit and _is_unit(h):
                return [{next(iter(h)): 1}]
            add(h)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        gi, gj = G[i], G[j]
        if mono_coprime(gi.lm, gj.lm):
            continue
        lcm = mono_lcm(gi.lm, gj.lm)
        skip = False
        for k, gk in enumerate(G):
            if k == i or k == j or not mono_divides(gk.lm, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        h = _reduce(_spoly(gi, gj), G, key)
        if h:
            if stop_on_unit and _is_unit(h):
                return [{next(iter(h)): 1}]
            add(h)

    return _interreduce(G, key)


def _interreduce(G: List[_Elem], key) -> List[Terms]:
    ordered = sorted(G, key=lambda e: key(e.lm))
    minimal: List[_Elem] = []
    for e in ordered:
        if not any(mono_divides(b.lm, e.lm) for b in minimal):
            minimal.append(e)
    out = []
    for idx, e in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = {m: c for m, c in e.terms.items() if m != e.lm}
        r = _reduce(tail, others, key)
        r[e.lm] = 1
        out.append(r)
    out.sort(key=lambda t: key(max(t, key=key)), reverse=True)
    return out


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def _ring_of(polys: Sequence[Polynomial]) -> Optional[PolyRing]:
    return polys[0].ring if polys else None


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """(lcm/lt(f))*f - (lcm/lt(g))*g with both inputs made monic first."""
    if not f or not g:
        raise ZeroInputError("S-polynomial of the zero polynomial")
    f._check(g)
    key = order.key
    return Polynomial._raw(f.ring, _spoly(_elem(f.terms, key), _elem(g.terms, key)))


def division(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX):
    """Multivariate division.  Returns ``(quotients, remainder)`` with f = sum q_b*b + remainder."""
    key = order.key
    elems = []
    for b in basis:
        if not b:
            raise ZeroInputError("zero polynomial in division basis")
        f._check(b)
        elems.append(_elem(b.terms, key))
    record: List[Terms] = [{} for _ in elems]
    rem = _reduce(f.terms, elems, key, record)
    quotients = [Polynomial._raw(f.ring, r) for r in record]
    return quotients, Polynomial._raw(f.ring, rem)


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of ``f`` on division by ``basis``; no term is divisible by a leading monomial."""
    key = order.key
    elems = []
    for b in basis:
        if not b:
            raise ZeroInputError("zero polynomial in division basis")
        f._check(b)
        elems.append(_elem(b.terms, key))
    return Polynomial._raw(f.ring, _reduce(f.terms, elems, key))


def buchberger(ideal: Ideal, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` under ``order`` (deterministic)."""
    polys = [g.terms for g in ideal.generators]
    out = _buchberger(polys, order) if polys else []
    elements = tuple(Polynomial._raw(ideal.ring, t) for t in out)
    return GroebnerBasis(ideal.ring, order, elements)


def is_groebner(ideal: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    """True iff every S-polynomial of two generators reduces to zero modulo the generators.

    Pairs with coprime leading monomials are skipped (their S-polynomial
    always reduces to zero), which does not change the answer.
    """
    key = order.key
    elems = [_elem(g.terms, key) for g in ideal.generators]
    for j in range(len(elems)):
        for i in range(j):
            if mono_coprime(elems[i].lm, elems[j].lm):
                continue
            if _reduce(_spoly(elems[i], elems[j]), elems, key):
                return False
    return True


def failing_pair(ideal: Ideal, order: MonomialOrder = GREVLEX):
    """First generator index pair whose S-polynomial does not reduce to zero, with its remainder."""
    key = order.key
    elems = [_elem(g.terms, key) for g in ideal.generators]
    for j in range(len(elems)):
        for i in range(j):
            if mono_coprime(elems[i].lm, elems[j].lm):
                continue
            r = _reduce(_spoly(elems[i], elems[j]), elems, key)
            if r:
                return (i, j), Polynomial._raw(ideal.ring, r)
    return None


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(gb.ring, gb.leading_monomials())


def ideal_member(f: Polynomial, gb: GroebnerBasis) -> bool:
    if f.ring.num_vars != gb.ring.num_vars:
        raise DimensionError("polynomial and basis from rings of different sizes")
    return not normal_form(f, gb.elements, gb.order)


def ideal_equal(I: Ideal, J: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    if I.ring.num_vars != J.ring.num_vars:
        raise DimensionError("ideals from rings of different sizes")
    return set(buchberger(I, order).elements) == set(buchberger(J, order).elements)


def ideal_contains(I: Ideal, J: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    """J is contained in I."""
    gb = buchberger(I, order)
    return all(ideal_member(g, gb) for g in J.generators)


def eliminate(ideal: Ideal, k: int) -> Ideal:
    """I intersected with the subring on all but the first ``k`` variables (returned in that subring)."""
    if not 0 < k < ideal.ring.num_vars:
        raise DimensionError("must eliminate between 1 and num_vars-1 variables")
    gb = buchberger(ideal, elimination(k))
    sub = ideal.ring.drop_leading(k)
    kept = [g.drop(sub, k) for g in gb.elements if not any(any(m[:k]) for m in g.terms)]
    return Ideal(sub, tuple(kept))


def _aux_name(ring: PolyRing) -> str:
    name = "t"
    while name in ring.variable_names:
        name = "_" + name
    return name


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I intersect J via elimination of t from t*I + (1-t)*J."""
    if I.ring.num_vars != J.ring.num_vars:
        raise DimensionError("ideals from rings of different sizes")
    ring = I.ring
    ext = ring.extended(_aux_name(ring))
    t = ext.gen(0)
    gens = [t * f.lift(ext, 1) for f in I.generators]
    gens += [(1 - t) * g.lift(ext, 1) for g in J.generators]
    out = eliminate(Ideal(ext, tuple(gens)), 1)
    return Ideal(ring, tuple(Polynomial._raw(ring, g.terms) for g in out.generators))


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """I : f^infinity via elimination of t from I + (t*f - 1)."""
    if not f:
        raise ZeroInputError("saturation by the zero polynomial")
    ring = I.ring
    ext = ring.extended(_aux_name(ring))
    t = ext.gen(0)
    gens = [g.lift(ext, 1) for g in I.generators] + [t * f.lift(ext, 1) - 1]
    out = eliminate(Ideal(ext, tuple(gens)), 1)
    return Ideal(ring, tuple(Polynomial._raw(ring, g.terms) for g in out.generators))


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """f in sqrt(I) iff 1 lies in I + (t*f - 1) (Rabinowitsch)."""
    if not f:
        raise ZeroInputError("radical membership of the zero polynomial")
    ring = I.ring
    ext = ring.extended(_aux_name(ring))
    t = ext.gen(0)
    gens = [g.lift(ext, 1).terms for g in I.generators] + [(t * f.lift(ext, 1) - 1).terms]
    out = _buchberger(gens, GREVLEX, stop_on_unit=True)
    return len(out) == 1 and _is_unit(out[0])


def radical_power_search(f: Polynomial, I: Ideal, max_power: int) -> Optional[int]:
    """Smallest k <= max_power with f^k in I, by plain membership tests (bounded oracle)."""
    gb = buchberger(I)
    p = f.ring.one()
    for k in range(1, max_power + 1):
        p = p * f
        if ideal_member(p, gb):
            return k
    return None


def graded_dim_ideal(I: Ideal, d: int, order: MonomialOrder = GREVLEX) -> int:
    """dim_K of the degree-``d`` piece of a homogeneous ideal, by counting standard monomials."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    if not I.generators:
        return 0
    J = initial_ideal(buchberger(I, order))
    total = comb(d + I.ring.num_vars - 1, d)
    return total - J.count_standard(d)
