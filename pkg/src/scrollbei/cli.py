"""``scrollbei`` command line: theorem suites and single-graph reports."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional

from .errors import ScrollError, SizeLimitError
from .graphio import graph_from_cliques, parse_graph
from .graphs import (
    LabeledGraph,
    clique_intervals,
    connected_components,
    has_interval_cliques,
    is_closed_labeling,
    is_connected,
    maximal_cliques,
)
from .groebner import buchberger, initial_ideal
from .hilbert import certify_cm, format_ipoly, hilbert_series_monomial, krull_dim_monomial, regularity_bound_check
from .polynomial import GREVLEX
from .scroll import (
    predicted_initial_ideal,
    predicted_minimal_primes,
    saturation_certificate,
    scroll_edge_ideal,
    scroll_ring,
)
from .suites import SCHEMA_VERSION, SUITES, graph_label, run_suite
from .variety import variety_union_compare

SHOW_COMMANDS = ("groebner", "initial", "dim", "hilbert", "regularity", "primes", "certificates")

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="scrollbei", description="Scroll binomial edge ideal toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a theorem-verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--q", type=int, action="append", default=None,
                   help="field prime for evidence suites (repeatable)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identity)")

    s = sub.add_parser("show", help="single-graph computations")
    s.add_argument("what", choices=SHOW_COMMANDS)
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", type=Path)
    src.add_argument("--cliques", nargs="+", metavar="[a,b]")
    s.add_argument("--q", type=int, default=3, help="field prime for 'primes'")
    s.add_argument("--json", action="store_true")

    sub.add_parser("suites", help="list suites and their anchors")
    return p


def _load_graph(args) -> LabeledGraph:
    if args.file is not None:
        return parse_graph(args.file.read_text())
    return graph_from_cliques(args.cliques)


def _initial(G: LabeledGraph):
    gb = buchberger(scroll_edge_ideal(G), GREVLEX)
    return gb, initial_ideal(gb)


def show_data(what: str, G: LabeledGraph, q: int = 3) -> Dict:
    """Compute one ``show`` report as a JSON-ready dict."""
    out: Dict = {"schema_version": SCHEMA_VERSION, "command": what, "graph": graph_label(G),
                 "closed": is_closed_labeling(G)}
    if what == "groebner":
        gb, _ = _initial(G)
        out["order"] = str(gb.order)
        out["elements"] = [g.render() for g in gb.elements]
        out["generators_are_groebner"] = len(gb.elements) == len(G.edges) and set(
            gb.elements) == set(scroll_edge_ideal(G).generators)
    elif what == "initial":
        _, J = _initial(G)
        out["initial"] = J.render()
        if out["closed"] and has_interval_cliques(G):
            out["predicted"] = predicted_initial_ideal(clique_intervals(G)).render()
    elif what == "dim":
        _, J = _initial(G)
        out["dim"] = krull_dim_monomial(J)
        out["components"] = connected_components(G).count
    elif what == "hilbert":
        _, J = _initial(G)
        hs = hilbert_series_monomial(J)
        out["numerator"] = format_ipoly(hs.numerator)
        out["numerator_coefficients"] = list(hs.numerator)
        out["dim"] = hs.denominator_exponent
        out["series"] = str(hs)
    elif what == "regularity":
        rep = regularity_bound_check(G)
        out.update(reg=rep.reg, r=rep.r, bound_holds=rep.ok, sharp=rep.sharp,
                   numerator=format_ipoly(rep.numerator), maximal_cliques=[list(c) for c in maximal_cliques(G)])
    elif what == "primes":
        primes = predicted_minimal_primes(G)
        _, J = _initial(G)
        cmp = variety_union_compare(scroll_edge_ideal(G), primes, q)
        out["predicted_primes"] = ["(" + ", ".join(g.render() for g in P.generators) + ")" for P in primes]
        out["variety_check"] = {"q": q, "equal": cmp.equal, "points": cmp.num_points,
                                "witness": list(cmp.witness) if cmp.witness else None,
                                "status": cmp.status}
    elif what == "certificates":
        ring = scroll_ring(G.n)
        certs = []
        if is_connected(G):
            for i in range(1, G.n + 1):
                for j in range(i + 1, G.n + 1):
                    c = saturation_certificate(G, i, j)
                    certs.append({
                        "pair": [i, j], "path": list(c.path),
                        "multiplier": ring.monomial(c.multiplier).render(),
                        "combination": [[coef.render(), list(e)] for coef, e in c.combination],
                        "verified": c.verify(ring)})
        out["saturation"] = certs
        if out["closed"]:
            cm = certify_cm(G)
            out["cm_sequence"] = cm.variable_names(ring) if cm else None
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(what)
    return out


def _show_text(d: Dict) -> str:
    lines = [f"graph: {d['graph']}", f"closed labeling: {d['closed']}"]
    for k, v in d.items():
        if k in ("schema_version", "command", "graph", "closed"):
            continue
        if isinstance(v, list) and v and isinstance(v[0], (str, dict)):
            lines.append(f"{k}:")
            for item in v:
                if isinstance(item, dict):
                    item = "  ".join(f"{a}={b}" for a, b in item.items())
                lines.append(f"  {item}")
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "suites":
            for name in sorted(SUITES):
                print(f"{name}: {SUITES[name].anchor}")
            return EXIT_PASS
        if args.command == "verify":
            report = run_suite(args.suite, max_n=args.max_n, q=args.q, workers=args.workers)
            print(report.to_json(args.timing) if args.json else report.to_text())
            return EXIT_PASS if report.passed else EXIT_FAIL
        G = _load_graph(args)
        d = show_data(args.what, G, q=args.q)
        print(json.dumps(d, indent=2, sort_keys=True) if args.json else _show_text(d))
        return EXIT_PASS
    except SizeLimitError as exc:
        print(f"scrollbei: refused: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ScrollError, ValueError, OSError) as exc:
        print(f"scrollbei: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
