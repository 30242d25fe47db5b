"""The scroll binomial edge ideals and their predicted structure.

For a graph G on [n] the ideal I_G lives in Q[x_1, ..., x_{n+1}] and is
generated by the 2-minors ``x_i x_{j+1} - x_j x_{i+1}`` of the 2 x n Hankel
matrix, one for each edge {i, j}.  Generators are stored monic under graded
reverse lex, i.e. as ``x_j x_{i+1} - x_i x_{j+1}``; :func:`paper_minor` keeps
the row-expansion sign.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Tuple

from .errors import NotClosedError, PreconditionError
from .graphs import (
    CliqueIntervals,
    LabeledGraph,
    clique_intervals,
    connected_components,
    is_closed_labeling,
    is_connected,
)
from .groebner import (
    Ideal,
    buchberger,
    graded_dim_ideal,
    ideal_equal,
    ideal_member,
    intersect,
    radical_membership,
)
from .monomial_ideal import MonomialIdeal, power_of_variables
from .polynomial import GREVLEX, Monomial, PolyRing, Polynomial


def scroll_ring(n: int) -> PolyRing:
    return PolyRing.scroll(n)


def paper_minor(ring: PolyRing, i: int, j: int) -> Polynomial:
    """delta_ij = x_i x_{j+1} - x_j x_{i+1} (antisymmetric in i, j)."""
    return ring.x(i) * ring.x(j + 1) - ring.x(j) * ring.x(i + 1)


def scroll_minor(ring: PolyRing, i: int, j: int) -> Polynomial:
    """The minor for {i, j}, made monic under graded reverse lex."""
    a, b = min(i, j), max(i, j)
    return paper_minor(ring, a, b).make_monic(GREVLEX)


def scroll_edge_ideal(G: LabeledGraph) -> Ideal:
    """I_G: one monic minor per edge, edges in lexicographic order."""
    ring = scroll_ring(G.n)
    return Ideal(ring, tuple(scroll_minor(ring, i, j) for i, j in G.sorted_edges()))


def scroll_full_ideal(n: int) -> Ideal:
    """I_X: all C(n, 2) minors (the rational normal curve)."""
    if n < 2:
        raise PreconditionError("I_X needs n >= 2")
    return scroll_edge_ideal(LabeledGraph.complete(n))


def middle_variables_ideal(n: int) -> Ideal:
    """(x_2, ..., x_n)."""
    ring = scroll_ring(n)
    return Ideal(ring, tuple(ring.x(i) for i in range(2, n + 1)))


def all_variables_product(ring: PolyRing) -> Polynomial:
    return ring.monomial((1,) * ring.num_vars)


def predicted_initial_ideal(ci: CliqueIntervals, n: int | None = None) -> MonomialIdeal:
    """Sum over intervals [a, b] of (x_{a+1}, ..., x_b)^2."""
    n = ci.n if n is None else n
    ring = scroll_ring(n)
    J = MonomialIdeal(ring)
    for a, b in ci.intervals:
        # x_k sits at position k - 1
        J = J + power_of_variables(ring, range(a, b), 2)
    return J


def _require_connected_closed(G: LabeledGraph):
    if not is_closed_labeling(G):
        raise NotClosedError(f"labeling of {G} is not closed")
    if not is_connected(G):
        raise PreconditionError(f"{G} is not connected")


# ---------------------------------------------------------------------------
# saturation certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SaturationCertificate:
    """``multiplier * delta_ij = sum c * delta_ab`` over edges {a, b} of G (a < b, row-expansion sign)."""

    i: int
    j: int
    path: Tuple[int, ...]
    multiplier: Monomial
    combination: Tuple[Tuple[Polynomial, Tuple[int, int]], ...] = field(compare=False)

    def expand(self, ring: PolyRing) -> Polynomial:
        total = ring.zero()
        for coeff, (a, b) in self.combination:
            total = total + coeff * paper_minor(ring, a, b)
        return total

    def target(self, ring: PolyRing) -> Polynomial:
        return ring.monomial(self.multiplier) * paper_minor(ring, self.i, self.j)

    def verify(self, ring: PolyRing) -> bool:
        return self.expand(ring) == self.target(ring)


def shortest_path(G: LabeledGraph, i: int, j: int) -> Tuple[int, ...]:
    """BFS path from i to j, neighbours visited in increasing order."""
    prev = {i: None}
    queue = deque([i])
    while queue:
        u = queue.popleft()
        if u == j:
            break
        for w in G.neighbors(u):
            if w not in prev:
                prev[w] = u
                queue.append(w)
    if j not in prev:
        raise PreconditionError(f"no path from {i} to {j}")
    path = [j]
    while path[-1] != i:
        path.append(prev[path[-1]])
    return tuple(reversed(path))


def saturation_certificate(G: LabeledGraph, i: int, j: int) -> SaturationCertificate:
    """Witness that delta_ij lies in I_G : x^infinity, built along a shortest path.

    With path i = i_0, ..., i_r = j the recursion is
    ``x_{i_{t-1}+1} delta_{i,i_t} = x_{i_t+1} delta_{i,i_{t-1}} + x_{i+1} delta_{i_{t-1},i_t}``.
    """
    if not is_connected(G):
        raise PreconditionError(f"{G} is not connected")
    if not 1 <= i < j <= G.n:
        raise PreconditionError("need 1 <= i < j <= n")
    ring = scroll_ring(G.n)
    path = shortest_path(G, i, j)

    def edge_term(a: int, b: int, coeff: Polynomial) -> Tuple[Tuple[int, int], Polynomial]:
        # delta_ab = -delta_ba
        return ((a, b), coeff) if a < b else ((b, a), -coeff)

    comb_map: Dict[Tuple[int, int], Polynomial] = {}
    e, c = edge_term(i, path[1], ring.one())
    comb_map[e] = c
    mult = ring.one()
    for t in range(2, len(path)):
        prev, cur = path[t - 1], path[t]
        comb_map = {e: ring.x(cur + 1) * c for e, c in comb_map.items()}
        e, c = edge_term(prev, cur, ring.x(i + 1) * mult)
        comb_map[e] = comb_map.get(e, ring.zero()) + c
        mult = mult * ring.x(prev + 1)
    (multiplier, _), = mult.terms.items()
    combination = tuple((c, e) for e, c in sorted(comb_map.items()) if c)
    return SaturationCertificate(i, j, path, multiplier, combination)


# ---------------------------------------------------------------------------
# predictions and checks
# ---------------------------------------------------------------------------


def predicted_minimal_primes(G: LabeledGraph) -> List[Ideal]:
    """[I_X] for K_n, otherwise [I_X, (x_2, ..., x_n)]."""
    _require_connected_closed(G)
    if G.is_complete():
        return [scroll_full_ideal(G.n)]
    return [scroll_full_ideal(G.n), middle_variables_ideal(G.n)]


def predicted_radical(G: LabeledGraph) -> bool:
    _require_connected_closed(G)
    if G.is_complete():
        return True
    return clique_intervals(G).intervals == ((1, G.n - 1), (2, G.n))


def radical_check(G: LabeledGraph) -> bool:
    """I_G == I_X cap (x_2, ..., x_n), which is the radical of I_G when G is not complete."""
    _require_connected_closed(G)
    if G.is_complete():
        return True
    return ideal_equal(scroll_edge_ideal(G), intersect(scroll_full_ideal(G.n), middle_variables_ideal(G.n)))


@dataclass
class StciReport:
    n: int
    complete: bool
    gens_in_sqrt_path: bool
    path_in_sqrt_gens: bool
    height: int
    failures: List[str]

    @property
    def ok(self) -> bool:
        return self.gens_in_sqrt_path and self.path_in_sqrt_gens and self.height == self.n - 1


def stci_witness(G: LabeledGraph) -> StciReport:
    """Check sqrt(I_G) = sqrt(I_{P_n}) by Rabinowitsch membership both ways, and height = n - 1."""
    from .hilbert import krull_dim_monomial

    _require_connected_closed(G)
    I = scroll_edge_ideal(G)
    P = scroll_edge_ideal(LabeledGraph.path(G.n))
    failures = []
    fwd = True
    for g in I.generators:
        if not radical_membership(g, P):
            fwd = False
            failures.append(f"{g} not in sqrt(I_P)")
    back = True
    for h in P.generators:
        if not radical_membership(h, I):
            back = False
            failures.append(f"{h} not in sqrt(I_G)")
    height = I.ring.num_vars - krull_dim_monomial(_initial(I))
    return StciReport(G.n, G.is_complete(), fwd, back, height, failures)


def _initial(I: Ideal) -> MonomialIdeal:
    from .groebner import initial_ideal

    return initial_ideal(buchberger(I, GREVLEX))


def linear_resolution_test(G: LabeledGraph) -> bool:
    """dim (I_G)_2 == C(g+1, 2) with g = n - c (height of I_G for closed G)."""
    if not is_closed_labeling(G):
        raise NotClosedError(f"labeling of {G} is not closed")
    c = connected_components(G).count
    g = G.n - c
    return graded_dim_ideal(scroll_edge_ideal(G), 2) == comb(g + 1, 2)


def generators_in(I: Ideal, J: Ideal) -> bool:
    """Every generator of I lies in J."""
    gb = buchberger(J)
    return all(ideal_member(f, gb) for f in I.generators)
