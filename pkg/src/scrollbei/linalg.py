"""Exact sparse linear algebra used as a Groebner-free oracle.

The degree-d piece of a homogeneous ideal is spanned by ``m * g`` for
generators ``g`` and monomials ``m`` of complementary degree; its dimension
is the rank of that coefficient matrix over Q.
"""

from __future__ import annotations

from typing import Dict, Iterable, List

from .monomial_ideal import monomials_of_degree
from .polynomial import exact_div, mono_mul, normalize_coeff


def exact_rank(rows: Iterable[Dict]) -> int:
    """Rank over Q of sparse rows given as ``{column: coefficient}`` dicts."""
    pivots: Dict[object, Dict] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            col = max(r)
            prow = pivots.get(col)
            if prow is None:
                lead = r[col]
                pivots[col] = {c: exact_div(v, lead) for c, v in r.items()}
                break
            a = r[col]
            for c, v in prow.items():
                nv = r.get(c, 0) - a * v
                if nv:
                    r[c] = normalize_coeff(nv)
                else:
                    r.pop(c, None)
    return len(pivots)


def degree_piece_rows(ideal, d: int) -> List[Dict]:
    n = ideal.ring.num_vars
    rows = []
    for g in ideal.generators:
        gd = g.degree()
        if gd > d or not g.is_homogeneous():
            if not g.is_homogeneous():
                raise ValueError("rank oracle needs homogeneous generators")
            continue
        for m in monomials_of_degree(n, d - gd):
            rows.append({mono_mul(m, gm): c for gm, c in g.terms.items()})
    return rows


def graded_dim_by_rank(ideal, d: int) -> int:
    """dim_K I_d from the rank of the spanning set {m*g}; uses no Groebner machinery."""
    return exact_rank(degree_piece_rows(ideal, d))
