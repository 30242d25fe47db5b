"""Monomial ideals stored by their minimal generators."""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Tuple

from .polynomial import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    PolyRing,
    mono_divides,
    render_monomial,
)


def minimalize(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Minimal generating antichain of the monomial ideal spanned by ``gens``."""
    uniq = sorted(set(gens), key=lambda m: (sum(m), m))
    kept = []
    for m in uniq:
        if not any(mono_divides(g, m) for g in kept):
            kept.append(m)
    return tuple(sorted(kept))


def monomials_of_degree(num_vars: int, d: int) -> Iterator[Monomial]:
    for combo in combinations_with_replacement(range(num_vars), d):
        e = [0] * num_vars
        for k in combo:
            e[k] += 1
        yield tuple(e)


class MonomialIdeal:
    """Monomial ideal with its unique minimal generating set (sorted, hashable)."""

    __slots__ = ("ring", "min_gens")

    def __init__(self, ring: PolyRing, gens: Iterable[Monomial] = ()):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != ring.num_vars:
                raise ValueError("monomial length does not match ring")
        self.ring = ring
        self.min_gens = minimalize(gens)

    @property
    def num_vars(self) -> int:
        return self.ring.num_vars

    def is_zero(self) -> bool:
        return not self.min_gens

    def contains(self, m: Monomial) -> bool:
        return any(mono_divides(g, m) for g in self.min_gens)

    def __contains__(self, m):
        return self.contains(tuple(m))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, self.min_gens + other.min_gens)

    def add_variable(self, k: int) -> "MonomialIdeal":
        e = [0] * self.num_vars
        e[k] = 1
        return MonomialIdeal(self.ring, self.min_gens + (tuple(e),))

    def colon_variable(self, k: int) -> "MonomialIdeal":
        """(J : x_k) computed on minimal generators."""
        out = []
        for g in self.min_gens:
            if g[k]:
                g = g[:k] + (g[k] - 1,) + g[k + 1:]
            out.append(g)
        return MonomialIdeal(self.ring, out)

    def support(self) -> set:
        return {k for g in self.min_gens for k, e in enumerate(g) if e}

    def standard_monomials(self, d: int) -> Iterator[Monomial]:
        for m in monomials_of_degree(self.num_vars, d):
            if not self.contains(m):
                yield m

    def count_standard(self, d: int) -> int:
        return sum(1 for _ in self.standard_monomials(d))

    def radical_gens(self) -> Tuple[Monomial, ...]:
        return minimalize(tuple(1 if e else 0 for e in g) for g in self.min_gens)

    def is_primary(self) -> bool:
        """Primary iff every variable in the support has a pure power among the generators.

        For monomial ideals this is exact: the radical is then the prime ideal
        generated by the support variables.
        """
        pure = {k for g in self.min_gens for k, e in enumerate(g) if e and sum(g) == e}
        return self.support() <= pure

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.num_vars == other.num_vars and self.min_gens == other.min_gens

    def __hash__(self):
        return hash((self.num_vars, self.min_gens))

    def render(self, order: MonomialOrder = GREVLEX):
        gens = sorted(self.min_gens, key=order.key, reverse=True)
        return "(" + ", ".join(render_monomial(g, self.ring) or "1" for g in gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self.render()}"


def power_of_variables(ring: PolyRing, positions: Iterable[int], power: int = 2) -> MonomialIdeal:
    """(x_k : k in positions)^power."""
    positions = sorted(set(positions))
    gens = []
    for combo in combinations_with_replacement(positions, power):
        e = [0] * ring.num_vars
        for k in combo:
            e[k] += 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, gens)
