"""Hilbert series, Krull dimension and regularity for monomial quotients.

Univariate integer polynomials are tuples of coefficients, lowest degree
first: ``(1, 0, -1)`` is ``1 - t^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InconsistencyError, NotClosedError, UncertifiedError
from .graphs import (
    LabeledGraph,
    connected_components,
    is_closed_labeling,
    maximal_cliques,
)
from .groebner import Ideal, buchberger, initial_ideal
from .monomial_ideal import MonomialIdeal, minimalize
from .polynomial import GREVLEX, mono_coprime, mono_gcd

IntPoly = Tuple[int, ...]


# ---------------------------------------------------------------------------
# integer polynomial helpers
# ---------------------------------------------------------------------------


def _trim(p: List[int]) -> IntPoly:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p) if p else (0,)


def ipoly_mul(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def ipoly_sub_shifted(a: Sequence[int], b: Sequence[int], shift: int) -> IntPoly:
    """a - t^shift * b."""
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for j, y in enumerate(b):
        out[j + shift] -= y
    return _trim(out)


def ipoly_eval(p: Sequence[int], t: int) -> int:
    return sum(c * t**k for k, c in enumerate(p))


def ipoly_divide_one_minus_t(p: Sequence[int]) -> Optional[IntPoly]:
    """p / (1 - t) if exact, else None."""
    if sum(p) != 0:
        return None
    # p = (1 - t) q  =>  q_k = sum_{i<=k} p_i
    q, acc = [], 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return _trim(q) if q else (0,)


def one_minus_t_power(e: int) -> IntPoly:
    return tuple((-1) ** k * comb(e, k) for k in range(e + 1))


def series_coefficients(numerator: Sequence[int], denominator_exponent: int, upto: int) -> List[int]:
    """First ``upto + 1`` power-series coefficients of numerator / (1 - t)^e."""
    e = denominator_exponent
    out = []
    for d in range(upto + 1):
        s = 0
        for k, c in enumerate(numerator):
            if k > d:
                break
            m = d - k
            s += c * (comb(m + e - 1, e - 1) if e > 0 else (1 if m == 0 else 0))
        out.append(s)
    return out


def format_ipoly(p: Sequence[int], var: str = "t") -> str:
    terms = []
    for k, c in enumerate(p):
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}" if mono else str(abs(c))
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


# ---------------------------------------------------------------------------
# numerator recursion
# ---------------------------------------------------------------------------


def hilbert_numerator(J: MonomialIdeal) -> IntPoly:
    """K(t) with H_{S/J}(t) = K(t) / (1 - t)^num_vars.

    Splits on the lexicographically largest minimal generator m of J = (J', m):
    ``K(J) = K(J') - t^deg(m) K(J' : m)``, memoised on generator sets.
    """
    memo: Dict[Tuple, IntPoly] = {}
    return _numerator(J.min_gens, memo)


def _numerator(gens: Tuple, memo: Dict) -> IntPoly:
    if not gens:
        return (1,)
    hit = memo.get(gens)
    if hit is not None:
        return hit
    if all(mono_coprime(a, b) for a, b in combinations(gens, 2)):
        out: IntPoly = (1,)
        for g in gens:
            out = ipoly_mul(out, _one_minus_t_to(sum(g)))
        memo[gens] = out
        return out
    m = max(gens)
    rest = tuple(g for g in gens if g != m)
    colon = minimalize(tuple(a - b for a, b in zip(g, mono_gcd(g, m))) for g in rest)
    out = ipoly_sub_shifted(_numerator(rest, memo), _numerator(colon, memo), sum(m))
    memo[gens] = out
    return out


def _one_minus_t_to(d: int) -> IntPoly:
    """1 - t^d."""
    p = [0] * (d + 1)
    p[0] = 1
    p[d] -= 1
    return _trim(p)


# ---------------------------------------------------------------------------
# dimension
# ---------------------------------------------------------------------------


def dim_by_pole_order(J: MonomialIdeal) -> int:
    K = hilbert_numerator(J)
    if K == (0,):
        return -1
    mult = 0
    while True:
        q = ipoly_divide_one_minus_t(K)
        if q is None:
            break
        K, mult = q, mult + 1
    return J.num_vars - mult


def dim_by_independent_sets(J: MonomialIdeal) -> int:
    """num_vars minus the smallest variable set meeting every generator's support."""
    supports = [frozenset(k for k, e in enumerate(g) if e) for g in J.min_gens]
    if any(not s for s in supports):
        return -1
    if not supports:
        return J.num_vars
    universe = sorted(set().union(*supports))
    for size in range(len(universe) + 1):
        for cover in combinations(universe, size):
            cs = set(cover)
            if all(s & cs for s in supports):
                return J.num_vars - size
    raise InconsistencyError("no hitting set found")  # unreachable


def krull_dim_monomial(J: MonomialIdeal) -> int:
    """dim S/J, computed two independent ways; disagreement is a hard failure."""
    a = dim_by_pole_order(J)
    b = dim_by_independent_sets(J)
    if a != b:
        raise InconsistencyError(f"dimension mismatch for {J}: pole order {a}, independent sets {b}")
    return a


# ---------------------------------------------------------------------------
# reduced series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1 - t)^denominator_exponent."""

    numerator: IntPoly
    denominator_exponent: int

    @property
    def degree(self) -> int:
        return len(self.numerator) - 1

    def coefficients(self, upto: int) -> List[int]:
        return series_coefficients(self.numerator, self.denominator_exponent, upto)

    def __str__(self):
        return f"({format_ipoly(self.numerator)}) / (1 - t)^{self.denominator_exponent}"


def reduced_series(K: Sequence[int], dim: int, num_vars: int) -> HilbertSeries:
    """Cancel (1 - t)^(num_vars - dim) from K exactly; P(1) must be nonzero."""
    P: IntPoly = tuple(K)
    for _ in range(num_vars - dim):
        q = ipoly_divide_one_minus_t(P)
        if q is None:
            raise InconsistencyError(f"(1 - t)^{num_vars - dim} does not divide {format_ipoly(K)}")
        P = q
    if ipoly_eval(P, 1) == 0:
        raise InconsistencyError(f"reduced numerator {format_ipoly(P)} vanishes at t = 1")
    return HilbertSeries(P, dim)


def hilbert_series_monomial(J: MonomialIdeal) -> HilbertSeries:
    return reduced_series(hilbert_numerator(J), krull_dim_monomial(J), J.num_vars)


def hilbert_series(I: Ideal) -> HilbertSeries:
    """Reduced Hilbert series of S/I via the graded reverse lex initial ideal."""
    return hilbert_series_monomial(initial_ideal(buchberger(I, GREVLEX)))


# ---------------------------------------------------------------------------
# Cohen-Macaulay certificates and regularity
# ---------------------------------------------------------------------------


def is_regular_on_monomial_quotient(J: MonomialIdeal, v: int) -> bool:
    """x_v (0-based position v) is a nonzerodivisor on S/J iff (J : x_v) = J."""
    return J.colon_variable(v) == J


def is_artinian(J: MonomialIdeal) -> bool:
    pure = {k for g in J.min_gens for k, e in enumerate(g) if e and sum(g) == e}
    return len(pure) == J.num_vars


def check_regular_sequence(J: MonomialIdeal, seq: Sequence[int]) -> Optional[MonomialIdeal]:
    """Quotient J + (x_v : v in seq) if ``seq`` is a regular sequence of variables, else None."""
    cur = J
    for v in seq:
        if not is_regular_on_monomial_quotient(cur, v):
            return None
        cur = cur.add_variable(v)
    return cur


@dataclass(frozen=True)
class CMCertificate:
    """Variables (0-based) forming a regular sequence of length dim with Artinian quotient."""

    sequence: Tuple[int, ...]
    dim: int
    quotient: MonomialIdeal = field(compare=False)

    def variable_names(self, ring) -> List[str]:
        return [ring.variable_names[v] for v in self.sequence]


def cm_certificate(J: MonomialIdeal, sequence: Optional[Sequence[int]] = None) -> Optional[CMCertificate]:
    """Depth >= dim witness for S/J, or None.

    A variable is regular on a monomial quotient exactly when it occurs in no
    minimal generator, so without an explicit ``sequence`` the candidates are
    the variables outside the support of J.
    """
    dim = krull_dim_monomial(J)
    if sequence is None:
        support = J.support()
        sequence = [k for k in range(J.num_vars) if k not in support]
    sequence = tuple(sequence)
    if len(sequence) != dim:
        return None
    quotient = check_regular_sequence(J, sequence)
    if quotient is None or not is_artinian(quotient):
        return None
    return CMCertificate(sequence, dim, quotient)


def regularity_cm(I: Ideal) -> int:
    """reg(S/I) = deg P(t) for Cohen-Macaulay S/I; refuses without a certificate."""
    J = initial_ideal(buchberger(I, GREVLEX))
    return regularity_from_initial(J)


def regularity_from_initial(J: MonomialIdeal) -> int:
    cert = cm_certificate(J)
    if cert is None:
        raise UncertifiedError(f"no Cohen-Macaulay certificate for S/{J.render()}")
    return hilbert_series_monomial(J).degree


def component_sequence(G: LabeledGraph) -> Optional[Tuple[int, ...]]:
    """x_first and x_{last+1} of every interval component, as sorted 0-based positions."""
    seq = set()
    for block in connected_components(G).blocks:
        if block != tuple(range(block[0], block[-1] + 1)):
            return None
        seq.add(block[0] - 1)
        seq.add(block[-1])
    return tuple(sorted(seq))


def certify_cm(G: LabeledGraph, J: Optional[MonomialIdeal] = None) -> Optional[CMCertificate]:
    """Regular-sequence certificate for S/in(I_G), built from the component blocks.

    Falls back to the variables outside the support of the initial ideal when
    the components are not intervals.
    """
    from .scroll import scroll_edge_ideal

    if not is_closed_labeling(G):
        raise NotClosedError(f"labeling of {G} is not closed")
    if J is None:
        J = initial_ideal(buchberger(scroll_edge_ideal(G), GREVLEX))
    seq = component_sequence(G)
    if seq is not None:
        cert = cm_certificate(J, seq)
        if cert is not None:
            return cert
    return cm_certificate(J)


def artinian_graded_dims(J: MonomialIdeal, sequence: Sequence[int], upto: int) -> List[int]:
    """dim_K (S/(J, x_v : v in sequence))_i for i = 0..upto, by counting monomials."""
    Q = J
    for v in sequence:
        Q = Q.add_variable(v)
    return [Q.count_standard(i) for i in range(upto + 1)]


@dataclass
class RegularityReport:
    reg: int
    r: int
    component_regs: List[int]
    numerator: IntPoly

    @property
    def ok(self) -> bool:
        return self.reg <= self.r

    @property
    def sharp(self) -> bool:
        return self.reg == self.r


def number_of_maximal_cliques(G: LabeledGraph) -> int:
    return len(maximal_cliques(G))


def regularity_bound_check(G: LabeledGraph) -> RegularityReport:
    """reg(S/I_G) against r, the number of maximal cliques summed over components."""
    from .scroll import scroll_edge_ideal

    if not is_closed_labeling(G):
        raise NotClosedError(f"labeling of {G} is not closed")
    J = initial_ideal(buchberger(scroll_edge_ideal(G), GREVLEX))
    if certify_cm(G, J) is None:
        raise UncertifiedError(f"no Cohen-Macaulay certificate for {G}")
    series = hilbert_series_monomial(J)
    comp_regs = []
    for block in connected_components(G).blocks:
        sub = LabeledGraph(G.n, frozenset(e for e in G.edges if e[0] in block))
        comp_regs.append(regularity_from_initial(initial_ideal(buchberger(scroll_edge_ideal(sub), GREVLEX))))
    return RegularityReport(series.degree, number_of_maximal_cliques(G), comp_regs, series.numerator)
