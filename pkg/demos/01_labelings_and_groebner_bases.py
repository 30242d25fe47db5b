"""Labelings matter: the same tree gives different dimensions and bases.

Run with ``python3 demos/01_labelings_and_groebner_bases.py``.
"""

from __future__ import annotations

from scrollbei.graphs import closedness_violation, find_closed_labeling, is_closed_labeling
from scrollbei.groebner import buchberger, failing_pair, initial_ideal, is_groebner
from scrollbei.hilbert import krull_dim_monomial
from scrollbei.scroll import scroll_edge_ideal
from scrollbei.suites import FIGURE_2A, FIGURE_2B, FINAL_EXAMPLE

for name, G in [("labeling (a)", FIGURE_2A), ("labeling (b)", FIGURE_2B)]:
    I = scroll_edge_ideal(G)
    gb = buchberger(I)
    J = initial_ideal(gb)
    print(f"{name}: edges {G.sorted_edges()}")
    print(f"  closed labeling: {is_closed_labeling(G)}  violation: {closedness_violation(G)}")
    print(f"  generators form a Groebner basis: {is_groebner(I)}")
    print(f"  reduced basis has {len(gb.elements)} elements, in(I_G) = {J.render()}")
    print(f"  dim S/I_G = {krull_dim_monomial(J)}")

# no relabeling of this tree is closed: it contains a claw
print("closed relabeling of (a):", find_closed_labeling(FIGURE_2A))

# a closed graph: the quadrics are already a Groebner basis
I = scroll_edge_ideal(FINAL_EXAMPLE)
print("\ncliques [1,4] [3,5] [4,6]")
print("  generators form a Groebner basis:", is_groebner(I), " failing pair:", failing_pair(I))
for g in buchberger(I).elements:
    print("   ", g.render())
