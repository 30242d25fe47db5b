"""Brute-force vanishing loci over small prime fields.

Point sets computed here are *evidence* for variety-level statements, not
proofs: agreement over F_q says nothing about other fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import FrozenSet, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionError, SizeLimitError
from .groebner import Ideal
from .polynomial import Polynomial

FIELD_PRIMES = (2, 3, 5, 7)
POINT_BUDGET = 10**7

FieldPoint = Tuple[int, ...]


def _check_field(q: int, num_vars: int):
    if q not in FIELD_PRIMES:
        raise ValueError(f"q must be one of {FIELD_PRIMES}")
    if q**num_vars > POINT_BUDGET:
        raise SizeLimitError(f"{q}^{num_vars} points exceeds the budget of {POINT_BUDGET}")


def integral_terms(f: Polynomial, q: int):
    """Coefficients of ``f`` with denominators cleared, reduced mod q."""
    den = 1
    for c in f.terms.values():
        if not isinstance(c, int):
            den = lcm(den, c.denominator)
    terms = [(m, int(c * den) % q) for m, c in f.terms.items()]
    terms = [(m, c) for m, c in terms if c]
    if not terms:
        raise ValueError(f"{f} vanishes identically mod {q} after clearing denominators")
    return terms


def _eval_grid(terms, grids, q: int) -> np.ndarray:
    out = None
    for m, c in terms:
        v = np.full(grids[0].shape, c, dtype=np.int64)
        for g, e in zip(grids, m):
            for _ in range(e):
                v = (v * g) % q
        out = v if out is None else (out + v) % q
    return out


def vanishing_mask(ideal: Ideal, q: int) -> np.ndarray:
    """Boolean array over F_q^N in lexicographic point order: True where all generators vanish."""
    N = ideal.ring.num_vars
    _check_field(q, N)
    gens = [integral_terms(g, q) for g in ideal.generators]
    total = q**N
    if not gens:
        return np.ones(total, dtype=bool)
    # chunk over the first coordinate to bound memory
    rest = np.indices((q,) * (N - 1)).reshape(N - 1, -1) if N > 1 else np.zeros((0, 1), dtype=np.int64)
    chunks = []
    for x0 in range(q):
        grids = [np.full(rest.shape[1], x0, dtype=np.int64)] + [r.astype(np.int64) for r in rest]
        mask = np.ones(rest.shape[1], dtype=bool)
        for terms in gens:
            mask &= _eval_grid(terms, grids, q) == 0
        chunks.append(mask)
    return np.concatenate(chunks)


def _point(index: int, q: int, N: int) -> FieldPoint:
    return tuple(int(v) for v in np.unravel_index(index, (q,) * N))


def variety_points(ideal: Ideal, q: int) -> FrozenSet[FieldPoint]:
    """All points of F_q^N where every generator of ``ideal`` vanishes."""
    N = ideal.ring.num_vars
    idx = np.flatnonzero(vanishing_mask(ideal, q))
    return frozenset(_point(int(i), q, N) for i in idx)


@dataclass(frozen=True)
class VarietyComparison:
    q: int
    equal: bool
    num_points: int
    witness: Optional[FieldPoint]
    witness_side: Optional[str]
    status: str = "evidence"

    def __bool__(self):
        return self.equal


def variety_union_compare(ideal: Ideal, primes: Sequence[Ideal], q: int) -> VarietyComparison:
    """Compare V(ideal) with the union of V(P) over F_q; report the lexicographically first mismatch."""
    N = ideal.ring.num_vars
    for P in primes:
        if P.ring.num_vars != N:
            raise DimensionError("ideals from rings of different sizes")
    lhs = vanishing_mask(ideal, q)
    rhs = np.zeros_like(lhs)
    for P in primes:
        rhs |= vanishing_mask(P, q)
    diff = np.flatnonzero(lhs != rhs)
    if diff.size == 0:
        return VarietyComparison(q, True, int(lhs.sum()), None, None)
    i = int(diff[0])
    side = "only in V(ideal)" if lhs[i] else "only in the union"
    return VarietyComparison(q, False, int(lhs.sum()), _point(i, q, N), side)


def variety_union_equal(ideal: Ideal, primes: Sequence[Ideal], q: int) -> bool:
    return variety_union_compare(ideal, primes, q).equal


def evaluate_mod(f: Polynomial, point: Sequence[int], q: int) -> int:
    return sum(c * _mono_value(m, point) for m, c in integral_terms(f, q)) % q


def _mono_value(m, point) -> int:
    v = 1
    for x, e in zip(point, m):
        v *= x**e
    return v
