"""Hilbert numerators and regularity for closed graphs.

For cliques on consecutive intervals the numerator factors into linear
terms, one per clique, so the regularity equals the number of cliques.
Overlapping cliques can drop below that count.
"""

from __future__ import annotations

from scrollbei.graphs import LabeledGraph
from scrollbei.hilbert import certify_cm, format_ipoly, regularity_bound_check
from scrollbei.scroll import scroll_ring
from scrollbei.suites import FINAL_EXAMPLE, remark_family_graph

print("consecutive intervals:")
for gaps in [(1, 1, 1), (2, 3), (1, 2, 3)]:
    G = remark_family_graph(gaps)
    rep = regularity_bound_check(G)
    print(f"  gaps {gaps}: P(t) = {format_ipoly(rep.numerator)}, reg = {rep.reg}, r = {rep.r}")

rep = regularity_bound_check(FINAL_EXAMPLE)
cert = certify_cm(FINAL_EXAMPLE)
print("\noverlapping cliques [1,4] [3,5] [4,6]:")
print(f"  regular sequence {cert.variable_names(scroll_ring(6))}")
print(f"  P(t) = {format_ipoly(rep.numerator)}, reg = {rep.reg} < r = {rep.r}")

for n in range(2, 6):
    rep = regularity_bound_check(LabeledGraph.complete(n))
    print(f"K_{n}: P(t) = {format_ipoly(rep.numerator)}, reg = {rep.reg}")
