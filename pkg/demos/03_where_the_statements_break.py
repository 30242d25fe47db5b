"""Graphs on which the closed-graph statements fail as literally stated.

The local closedness condition does not force the maximal cliques to be
intervals once the graph is disconnected, and several statements quietly
assume that they are.  Each block below prints a smallest witness.
"""

from __future__ import annotations

from scrollbei.graphs import LabeledGraph, is_closed_labeling, maximal_cliques
from scrollbei.groebner import buchberger, failing_pair, initial_ideal, is_groebner, radical_membership
from scrollbei.hilbert import format_ipoly, hilbert_series_monomial, krull_dim_monomial
from scrollbei.scroll import linear_resolution_test, paper_minor, scroll_edge_ideal, scroll_ring

G = LabeledGraph(4, frozenset({(1, 3), (2, 4)}))
I = scroll_edge_ideal(G)
print("edges 1-3, 2-4:")
print("  closed labeling:", is_closed_labeling(G), " cliques:", maximal_cliques(G))
print("  generators a Groebner basis:", is_groebner(I), " failing pair:", failing_pair(I))

G = LabeledGraph(6, frozenset({(1, 3), (2, 4), (3, 5), (4, 6)}))
J = initial_ideal(buchberger(scroll_edge_ideal(G)))
hs = hilbert_series_monomial(J)
print("\nedges 1-3, 2-4, 3-5, 4-6 (two components):")
print(f"  dim = {krull_dim_monomial(J)} (1 + c = 3), P(t) = {format_ipoly(hs.numerator)}")

G = LabeledGraph(3, frozenset({(1, 2)}))
print("\nK_2 plus an isolated vertex: linear-resolution test", linear_resolution_test(G))

n = 4
ring = scroll_ring(n)
path = scroll_edge_ideal(LabeledGraph.path(n))
d = paper_minor(ring, 1, n)
print(f"\ndelta_1{n} in sqrt(I_P{n}):", radical_membership(d, path),
      " value at (1,0,0,0,1):", d.evaluate((1, 0, 0, 0, 1)))
