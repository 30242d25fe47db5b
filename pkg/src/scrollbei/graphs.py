"""Labeled simple graphs on [n], closed labelings and clique intervals.

Vertices are the integers 1..n and the labeling is part of the object:
relabeling produces a different graph (and a different ideal).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .errors import NotClosedError, PreconditionError, SizeLimitError

Edge = Tuple[int, int]

MAX_CLIQUE_N = 16
MAX_LABELING_N = 8
MAX_ALL_N = 7
MAX_CLOSED_N = 8
FILTERS = ("all", "connected", "closed", "connected-closed")


def edge_list(n: int) -> List[Edge]:
    """All pairs i < j of [n] in lexicographic order; edge k is bit k of an edge mask."""
    return list(combinations(range(1, n + 1), 2))


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        clean = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            i, j = min(i, j), max(i, j)
            if not (1 <= i and j <= self.n):
                raise ValueError(f"edge {e} outside [1, {self.n}]")
            clean.add((i, j))
        object.__setattr__(self, "edges", frozenset(clean))

    # constructors ------------------------------------------------------------

    @classmethod
    def complete(cls, n: int) -> "LabeledGraph":
        return cls(n, frozenset(edge_list(n)))

    @classmethod
    def path(cls, n: int) -> "LabeledGraph":
        """The line graph 1-2-...-n."""
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @classmethod
    def empty(cls, n: int) -> "LabeledGraph":
        return cls(n)

    @classmethod
    def from_cliques(cls, intervals: Sequence[Tuple[int, int]], n: int | None = None) -> "LabeledGraph":
        """Graph whose maximal cliques are the given intervals [a, b]."""
        if n is None:
            n = max(b for _, b in intervals)
        edges = set()
        for a, b in intervals:
            if a > b:
                raise ValueError(f"bad interval [{a},{b}]")
            edges.update(combinations(range(a, b + 1), 2))
        return cls(n, frozenset(edges))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "LabeledGraph":
        return cls(n, frozenset(e for k, e in enumerate(edge_list(n)) if mask >> k & 1))

    # queries -------------------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def mask(self) -> int:
        return sum(1 << k for k, e in enumerate(edge_list(self.n)) if e in self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, v: int) -> List[int]:
        return sorted([j for i, j in self.edges if i == v] + [i for i, j in self.edges if j == v])

    def adjacency_masks(self) -> List[int]:
        """adj[v] is a bitmask over vertices (bit v) for v in 1..n; adj[0] unused."""
        adj = [0] * (self.n + 1)
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def relabel(self, perm: Sequence[int]) -> "LabeledGraph":
        """Apply ``perm`` where ``perm[v-1]`` is the new label of vertex v."""
        return LabeledGraph(self.n, frozenset((perm[i - 1], perm[j - 1]) for i, j in self.edges))

    def __str__(self):
        es = " ".join(f"{i}-{j}" for i, j in self.sorted_edges())
        return f"G(n={self.n}: {es})"


@dataclass(frozen=True)
class ComponentPartition:
    blocks: Tuple[Tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class CliqueIntervals:
    intervals: Tuple[Tuple[int, int], ...]
    n: int

    @property
    def r(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)


# ---------------------------------------------------------------------------
# closedness, components, cliques
# ---------------------------------------------------------------------------


def is_closed_labeling(G: LabeledGraph) -> bool:
    """Whenever {i,j},{i,k} are edges with j, k on the same side of i, {j,k} is an edge."""
    for i in G.vertices:
        nb = G.neighbors(i)
        for side in ([v for v in nb if v > i], [v for v in nb if v < i]):
            for j, k in combinations(side, 2):
                if not G.has_edge(j, k):
                    return False
    return True


def closedness_violation(G: LabeledGraph) -> Optional[Tuple[int, int, int]]:
    """First (i, j, k) with {i,j},{i,k} edges on one side of i and {j,k} missing."""
    for i in G.vertices:
        nb = G.neighbors(i)
        for side in ([v for v in nb if v > i], [v for v in nb if v < i]):
            for j, k in combinations(side, 2):
                if not G.has_edge(j, k):
                    return i, j, k
    return None


def connected_components(G: LabeledGraph) -> ComponentPartition:
    adj = G.adjacency_masks()
    seen = 0
    blocks = []
    for v in G.vertices:
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            u = frontier
            while u:
                low = u & -u
                nxt |= adj[low.bit_length() - 1]
                u ^= low
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        blocks.append(tuple(w for w in G.vertices if comp >> w & 1))
    return ComponentPartition(tuple(blocks))


def is_connected(G: LabeledGraph) -> bool:
    return connected_components(G).count == 1


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def maximal_cliques(G: LabeledGraph) -> List[Tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted lexicographically."""
    if G.n > MAX_CLIQUE_N:
        raise SizeLimitError(f"maximal_cliques supports n <= {MAX_CLIQUE_N}")
    adj = G.adjacency_masks()
    found = []

    def expand(R: int, P: int, X: int):
        if not P and not X:
            found.append(tuple(_bits(R)))
            return
        pivot = max(_bits(P | X), key=lambda u: bin(P & adj[u]).count("1"))
        for v in _bits(P & ~adj[pivot]):
            expand(R | 1 << v, P & adj[v], X & adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    everything = sum(1 << v for v in G.vertices)
    expand(0, everything, 0)
    return sorted(found)


def _cliques_by_interval_scan(G: LabeledGraph) -> List[Tuple[int, ...]]:
    # valid for closed labelings whose maximal cliques are intervals
    adj = G.adjacency_masks()
    reach = []
    for a in G.vertices:
        b = a
        while b < G.n and all(adj[b + 1] >> u & 1 for u in range(a, b + 1)):
            b += 1
        reach.append((a, b))
    out = []
    last_b = 0
    for a, b in reach:
        if b > last_b:
            out.append(tuple(range(a, b + 1)))
            last_b = b
    return out


def has_interval_cliques(G: LabeledGraph) -> bool:
    return all(c == tuple(range(c[0], c[-1] + 1)) for c in maximal_cliques(G))


def clique_intervals(G: LabeledGraph) -> CliqueIntervals:
    """Maximal cliques of a closed labeling as intervals [a_i, b_i] sorted by a_i.

    Raises :class:`NotClosedError` when the labeling is not closed, and
    :class:`PreconditionError` for a closed labeling whose cliques are not
    intervals (possible only when G is disconnected).
    """
    if not is_closed_labeling(G):
        raise NotClosedError(f"labeling of {G} is not closed")
    cliques = maximal_cliques(G)
    intervals = []
    for c in cliques:
        if c != tuple(range(c[0], c[-1] + 1)):
            raise PreconditionError(f"maximal clique {c} of {G} is not an interval")
        intervals.append((c[0], c[-1]))
    intervals.sort()
    fast = _cliques_by_interval_scan(G)
    if [(c[0], c[-1]) for c in fast] != intervals:
        raise AssertionError("interval scan disagrees with Bron-Kerbosch")
    return CliqueIntervals(tuple(intervals), G.n)


# ---------------------------------------------------------------------------
# closed labeling search
# ---------------------------------------------------------------------------


def find_closed_labeling(G: LabeledGraph) -> Optional[Tuple[int, ...]]:
    """Permutation ``perm`` (``perm[v-1]`` = new label of v) making G closed, or None.

    Labels are handed out 1, 2, ... in turn; a prefix is abandoned as soon as
    the closedness condition fails among the already-labeled vertices.
    """
    n = G.n
    if n > MAX_LABELING_N:
        raise SizeLimitError(f"find_closed_labeling supports n <= {MAX_LABELING_N}")
    adj = G.adjacency_masks()
    order: List[int] = []  # order[k] = old vertex receiving label k+1
    placed = 0

    def ok(v: int) -> bool:
        lower = [u for u in order if adj[v] >> u & 1]
        for a, b in combinations(lower, 2):
            if not adj[a] >> b & 1:
                return False
        for u in lower:
            pos = order.index(u)
            for w in order[pos + 1:]:
                if adj[u] >> w & 1 and not adj[w] >> v & 1:
                    return False
        return True

    def search() -> bool:
        nonlocal placed
        if len(order) == n:
            return True
        for v in G.vertices:
            if placed >> v & 1 or not ok(v):
                continue
            order.append(v)
            placed |= 1 << v
            if search():
                return True
            order.pop()
            placed &= ~(1 << v)
        return False

    if not search():
        return None
    perm = [0] * n
    for label, v in enumerate(order, start=1):
        perm[v - 1] = label
    return tuple(perm)


def find_closed_labeling_bruteforce(G: LabeledGraph) -> Optional[Tuple[int, ...]]:
    """Unpruned reference: first permutation in lexicographic order that closes G."""
    for perm in permutations(range(1, G.n + 1)):
        if is_closed_labeling(G.relabel(perm)):
            return perm
    return None


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _closed_masks(n: int) -> List[int]:
    """Edge masks of every closed labeled graph on [n].

    Vertices are added in increasing order; the new vertex v may take a lower
    neighbourhood L only if L is a clique and every earlier upper neighbour of
    each u in L is itself in L.
    """
    index = {e: k for k, e in enumerate(edge_list(n))}
    results = []
    adj = [0] * (n + 1)

    def grow(v: int, mask: int):
        if v > n:
            results.append(mask)
            return
        earlier = list(range(1, v))
        for r in range(len(earlier) + 1):
            for L in combinations(earlier, r):
                Lmask = sum(1 << u for u in L)
                if any((adj[a] >> b & 1) == 0 for a, b in combinations(L, 2)):
                    continue
                if any(adj[u] & ~((1 << (u + 1)) - 1) & ~Lmask for u in L):
                    continue
                for u in L:
                    adj[u] |= 1 << v
                adj[v] = Lmask
                grow(v + 1, mask | sum(1 << index[(u, v)] for u in L))
                for u in L:
                    adj[u] &= ~(1 << v)
                adj[v] = 0

    grow(1, 0)
    return sorted(results)


def enumerate_graphs(n: int, filter: str = "all") -> Iterator[LabeledGraph]:
    """Every labeled graph on [n] passing ``filter``, once each, by increasing edge mask."""
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}; choose from {FILTERS}")
    if n < 1:
        raise ValueError("n must be positive")
    if filter in ("all", "connected"):
        if n > MAX_ALL_N:
            raise SizeLimitError(f"filter {filter!r} supports n <= {MAX_ALL_N}")
        for mask in range(1 << (n * (n - 1) // 2)):
            G = LabeledGraph.from_mask(n, mask)
            if filter == "connected" and not is_connected(G):
                continue
            yield G
        return
    if n > MAX_CLOSED_N:
        raise SizeLimitError(f"filter {filter!r} supports n <= {MAX_CLOSED_N}")
    for mask in _closed_masks(n):
        G = LabeledGraph.from_mask(n, mask)
        if filter == "connected-closed" and not is_connected(G):
            continue
        yield G
