"""Text format for labeled graphs.

    # comment
    n 6
    e 1 2
    e 2 3

or the closed-graph shorthand ``cliques [1,4] [3,5] [4,6]`` (the ``n`` line
is optional there and defaults to the largest right endpoint).
"""

from __future__ import annotations

import re
from typing import List, Optional, Sequence, Tuple

from .errors import ParseError
from .graphs import LabeledGraph

_INTERVAL = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_intervals(text: str, line: Optional[int] = None) -> List[Tuple[int, int]]:
    """Parse ``[a,b] [c,d] ...`` into integer pairs."""
    stripped = _INTERVAL.sub("", text).strip()
    if stripped:
        raise ParseError(f"cannot parse clique list near {stripped!r}", line)
    out = [(int(a), int(b)) for a, b in _INTERVAL.findall(text)]
    if not out:
        raise ParseError("empty clique list", line)
    for a, b in out:
        if not 1 <= a <= b:
            raise ParseError(f"bad interval [{a},{b}]", line)
    return out


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text: str) -> LabeledGraph:
    n: Optional[int] = None
    edges: List[Tuple[int, int, int]] = []
    cliques: Optional[List[Tuple[int, int]]] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        toks = rest.split()
        if head == "n":
            if n is not None:
                raise ParseError("duplicate n line", lineno)
            if len(toks) != 1:
                raise ParseError("expected 'n <count>'", lineno)
            n = _int(toks[0], lineno)
            if n < 1:
                raise ParseError("n must be positive", lineno)
        elif head == "e":
            if len(toks) != 2:
                raise ParseError("expected 'e <i> <j>'", lineno)
            i, j = _int(toks[0], lineno), _int(toks[1], lineno)
            edges.append((i, j, lineno))
        elif head == "cliques":
            if cliques is not None:
                raise ParseError("duplicate cliques line", lineno)
            cliques = parse_intervals(rest, lineno)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if cliques is not None:
        if edges:
            raise ParseError("cannot mix 'cliques' with 'e' lines")
        top = max(b for _, b in cliques)
        if n is not None and top > n:
            raise ParseError(f"clique endpoint {top} exceeds n = {n}")
        return LabeledGraph.from_cliques(cliques, n if n is not None else top)
    if n is None:
        raise ParseError("missing 'n <count>' line")
    seen = set()
    for i, j, lineno in edges:
        if i == j:
            raise ParseError(f"loop at vertex {i}", lineno)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"vertex out of range 1..{n}", lineno)
        e = (min(i, j), max(i, j))
        if e in seen:
            raise ParseError(f"duplicate edge {e[0]}-{e[1]}", lineno)
        seen.add(e)
    return LabeledGraph(n, frozenset(seen))


def format_graph(G: LabeledGraph) -> str:
    lines = [f"n {G.n}"] + [f"e {i} {j}" for i, j in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_from_cliques(specs: Sequence[str]) -> LabeledGraph:
    """CLI helper: ``["[1,4]", "[3,5]"]`` or one joined string."""
    return parse_graph("cliques " + " ".join(specs))
