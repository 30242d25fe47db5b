"""Theorem-verification suites over enumerated graph families.

Each suite is a family of cases plus a checker.  Cases are plain tuples so
they can be shipped to worker processes; results are merged in case order,
so reports do not depend on the worker count.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from math import prod
from multiprocessing import Pool
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from . import graphs as gm
from .errors import InconsistencyError, SizeLimitError, UncertifiedError
from .graphs import LabeledGraph, enumerate_graphs
from .groebner import (
    buchberger,
    graded_dim_ideal,
    ideal_equal,
    initial_ideal,
    is_groebner,
    saturate,
)
from .hilbert import (
    artinian_graded_dims,
    certify_cm,
    hilbert_numerator,
    hilbert_series_monomial,
    krull_dim_monomial,
    regularity_bound_check,
    series_coefficients,
)
from .linalg import graded_dim_by_rank
from .monomial_ideal import monomials_of_degree
from .scroll import (
    all_variables_product,
    generators_in,
    linear_resolution_test,
    middle_variables_ideal,
    predicted_initial_ideal,
    predicted_minimal_primes,
    predicted_radical,
    radical_check,
    saturation_certificate,
    scroll_edge_ideal,
    scroll_full_ideal,
    stci_witness,
)
from .variety import variety_union_compare

SCHEMA_VERSION = 1
GB_SAMPLE_SEED = 20131
GB_SAMPLE_SIZE = 5000
HARD_CAP_ALL = gm.MAX_ALL_N
HARD_CAP_CLOSED = gm.MAX_CLOSED_N

FIGURE_2A = LabeledGraph(6, frozenset({(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)}))
FIGURE_2B = LabeledGraph(6, frozenset({(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)}))
FINAL_EXAMPLE = LabeledGraph.from_cliques([(1, 4), (3, 5), (4, 6)])


@dataclass
class TheoremReport:
    suite: str
    anchor: str
    parameters: Dict
    cases_run: int = 0
    cases_passed: int = 0
    counterexamples: List[Dict] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    level: str = "exact"
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self, include_timing: bool = False) -> Dict:
        d = {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "anchor": self.anchor,
            "level": self.level,
            "parameters": self.parameters,
            "cases_run": self.cases_run,
            "cases_passed": self.cases_passed,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }
        if include_timing:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True)

    def to_text(self, max_examples: int = 10) -> str:
        lines = [
            f"suite: {self.suite}",
            f"anchor: {self.anchor}",
            f"level: {self.level}",
            "parameters: " + ", ".join(f"{k}={v}" for k, v in sorted(self.parameters.items())),
            f"cases: {self.cases_passed}/{self.cases_run} passed",
        ]
        for note in self.notes:
            lines.append(f"note: {note}")
        if self.counterexamples:
            lines.append(f"counterexamples: {len(self.counterexamples)}")
            for ce in self.counterexamples[:max_examples]:
                lines.append(f"  {ce['graph']}: expected {ce['expected']}, got {ce['actual']}")
            if len(self.counterexamples) > max_examples:
                lines.append(f"  ... {len(self.counterexamples) - max_examples} more")
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def graph_label(G: LabeledGraph) -> str:
    return f"n={G.n} edges=[" + " ".join(f"{i}-{j}" for i, j in G.sorted_edges()) + "]"


# ---------------------------------------------------------------------------
# checkers: case tuple -> (ok, expected, actual)
# ---------------------------------------------------------------------------


def _graph(case) -> LabeledGraph:
    return LabeledGraph.from_mask(case[0], case[1])


def check_figure_dim(case):
    G = _graph(case)
    J = initial_ideal(buchberger(scroll_edge_ideal(G)))
    d = krull_dim_monomial(J)
    return d == case[2], case[2], d


def check_gb_closed(case):
    G = _graph(case)
    closed = gm.is_closed_labeling(G)
    gb = is_groebner(scroll_edge_ideal(G))
    return gb == closed, f"is_groebner={closed}", f"is_groebner={gb}"


def check_initial_ideal(case):
    G = _graph(case)
    J = initial_ideal(buchberger(scroll_edge_ideal(G)))
    predicted = predicted_initial_ideal(gm.clique_intervals(G))
    d = krull_dim_monomial(J)
    primary = predicted.is_primary()
    radical_ok = set(predicted.radical_gens()) == {tuple(1 if k == i else 0 for k in range(G.n + 1))
                                                  for i in range(1, G.n)}
    ok = J == predicted and d == 2 and primary and radical_ok
    return ok, f"in={predicted.render()} dim=2 primary", f"in={J.render()} dim={d} primary={primary and radical_ok}"


def check_dimension(case):
    G = _graph(case)
    c = gm.connected_components(G).count
    d = krull_dim_monomial(initial_ideal(buchberger(scroll_edge_ideal(G))))
    return d == 1 + c, f"dim={1 + c}", f"dim={d}"


def check_saturation_certificates(case):
    G = _graph(case)
    ring = scroll_edge_ideal(G).ring
    bad = []
    for i in range(1, G.n + 1):
        for j in range(i + 1, G.n + 1):
            if not saturation_certificate(G, i, j).verify(ring):
                bad.append((i, j))
    return not bad, "all certificates expand exactly", f"failing pairs {bad}" if bad else "ok"


def check_saturation(case):
    G = _graph(case)
    I = scroll_edge_ideal(G)
    sat = saturate(I, all_variables_product(I.ring))
    eq = ideal_equal(sat, scroll_full_ideal(G.n))
    return eq, "I_G : x^inf = I_X", "equal" if eq else "different"


def check_minimal_primes(case):
    G = _graph(case)
    n, q = case[0], case[2]
    I = scroll_edge_ideal(G)
    primes = predicted_minimal_primes(G)
    cmp = variety_union_compare(I, primes, q)
    contained = all(generators_in(I, P) for P in primes)
    actual = "V equal" if cmp.equal else f"witness {cmp.witness} {cmp.witness_side}"
    if not contained:
        actual += "; generator outside a predicted prime"
    return cmp.equal and contained, f"V(I_G) = V(I_X) u V(x_2..x_{n}) over F_{q}", actual


def check_radical(case):
    G = _graph(case)
    actual = radical_check(G)
    predicted = predicted_radical(G)
    return actual == predicted, f"radical={predicted}", f"radical={actual}"


def check_stci(case):
    G = _graph(case)
    rep = stci_witness(G)
    actual = f"gens_in_sqrt_path={rep.gens_in_sqrt_path} path_in_sqrt_gens={rep.path_in_sqrt_gens} height={rep.height}"
    return rep.ok, f"both True, height={G.n - 1}", actual


def check_regularity_bound(case):
    G = _graph(case)
    try:
        rep = regularity_bound_check(G)
    except UncertifiedError:
        return False, "certified CM, reg <= r", "no Cohen-Macaulay certificate"
    ok = rep.ok and rep.reg == sum(rep.component_regs)
    return ok, f"reg <= r={rep.r}", f"reg={rep.reg} (components {rep.component_regs})"


def remark_family_graph(gaps: Tuple[int, ...]) -> LabeledGraph:
    a = [1]
    for g in gaps:
        a.append(a[-1] + g)
    return LabeledGraph.from_cliques([(a[i], a[i + 1]) for i in range(len(gaps))])


def check_remark_family(case):
    gaps = case[2]
    G = remark_family_graph(gaps)
    rep = regularity_bound_check(G)
    J = initial_ideal(buchberger(scroll_edge_ideal(G)))
    P = hilbert_series_monomial(J).numerator
    expected = (1,)
    for g in gaps:
        expected = tuple(_mul(expected, (1, g)))
    ok = tuple(P) == expected and rep.reg == rep.r == len(gaps)
    return ok, f"P={list(expected)} reg=r={len(gaps)}", f"P={list(P)} reg={rep.reg} r={rep.r}"


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def check_two_cliques(case):
    G = _graph(case)
    try:
        rep = regularity_bound_check(G)
    except UncertifiedError:
        return False, "reg=2", "no Cohen-Macaulay certificate"
    return rep.reg == 2, "reg=2", f"reg={rep.reg}"


def check_final_example(case):
    rep = regularity_bound_check(FINAL_EXAMPLE)
    return rep.reg == 2 and rep.r == 3, "reg=2 < r=3", f"reg={rep.reg} r={rep.r}"


def check_linear_resolution(case):
    G = _graph(case)
    lin = linear_resolution_test(G)
    return lin == G.is_complete(), f"linear={G.is_complete()}", f"linear={lin}"


def check_quadric_count(case):
    G = _graph(case)
    d = graded_dim_by_rank(scroll_edge_ideal(G), 2)
    return d == len(G.edges), f"dim (I_G)_2={len(G.edges)}", f"rank={d}"


def check_engine(case):
    """Hilbert counts (d <= 6), Macaulay agreement (d <= 4), GB idempotence, Krull agreement."""
    G = _graph(case)
    I = scroll_edge_ideal(G)
    gb = buchberger(I)
    J = initial_ideal(gb)
    problems = []
    K = hilbert_numerator(J)
    coeffs = series_coefficients(K, J.num_vars, 6)
    counts = [J.count_standard(d) for d in range(7)]
    if coeffs != counts:
        problems.append(f"hilbert {coeffs} vs counts {counts}")
    for d in range(5):
        total = sum(1 for _ in monomials_of_degree(J.num_vars, d))
        if total - counts[d] != graded_dim_by_rank(I, d):
            problems.append(f"macaulay d={d}")
    again = buchberger(gb.as_ideal())
    if again.elements != gb.elements:
        problems.append("gb not idempotent")
    try:
        krull_dim_monomial(J)
    except InconsistencyError as exc:
        problems.append(str(exc))
    return not problems, "all self-checks agree", "; ".join(problems) or "ok"


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


def _masks(n: int, filt: str) -> Iterable[int]:
    return (G.mask() for G in enumerate_graphs(n, filt))


def _range(params, lo=1):
    return range(lo, params["max_n"] + 1)


def fam_figure(params):
    return [(6, FIGURE_2A.mask(), 3), (6, FIGURE_2B.mask(), 4)]


def fam_gb(params):
    cases = [(n, m) for n in _range(params) for m in range(1 << (n * (n - 1) // 2))]
    if params.get("sample_n"):
        n = params["sample_n"]
        rng = random.Random(params.get("seed", GB_SAMPLE_SEED))
        picked = sorted(rng.sample(range(1 << (n * (n - 1) // 2)), params.get("sample", GB_SAMPLE_SIZE)))
        cases += [(n, m) for m in picked]
    return cases


def fam_connected_closed(params, lo=1):
    return [(n, m) for n in _range(params, lo) for m in _masks(n, "connected-closed")]


def fam_connected_closed_2(params):
    return fam_connected_closed(params, lo=2)


def fam_closed(params):
    return [(n, m) for n in _range(params) for m in _masks(n, "closed")]


def fam_connected(params):
    return [(n, m) for n in _range(params, 2) for m in _masks(n, "connected")]


def fam_minimal_primes(params):
    out = []
    for n in _range(params, 2):
        for m in _masks(n, "connected-closed"):
            if not LabeledGraph.from_mask(n, m).is_complete():
                out.extend((n, m, q) for q in params["q"])
    return out


def fam_remark(params):
    out = []
    for n in _range(params, 2):
        for gaps in _compositions(n - 1):
            out.append((n, 0, gaps))
    return out


def _compositions(total: int):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def fam_two_cliques(params):
    out = []
    for n in _range(params):
        for G in enumerate_graphs(n, "closed"):
            if len(gm.maximal_cliques(G)) == 2:
                out.append((n, G.mask()))
    return out


def fam_all(params):
    return [(n, m) for n in _range(params) for m in range(1 << (n * (n - 1) // 2))]


@dataclass(frozen=True)
class Suite:
    name: str
    anchor: str
    family: Callable
    checker: Callable
    default_n: int
    cap: int
    level: str = "exact"
    uses_q: bool = False


SUITES: Dict[str, Suite] = {}


def _register(*args, **kw):
    s = Suite(*args, **kw)
    SUITES[s.name] = s


_register("figure2-dim", "Figure 2: dim S/I_G = 3 for labeling (a), 4 for labeling (b)",
          fam_figure, check_figure_dim, 6, 6)
_register("gb-closed", "Theorem GB: generators are a revlex Groebner basis iff the labeling is closed",
          fam_gb, check_gb_closed, 5, HARD_CAP_ALL)
_register("initial-ideal", "Prop. initial: in_rev(I_G) = sum of (x_{a+1},...,x_b)^2, primary, dim 2",
          fam_connected_closed, check_initial_ideal, 8, HARD_CAP_CLOSED)
_register("dimension", "Cor. corCM: dim S/I_G = 1 + c for closed G",
          fam_closed, check_dimension, 7, HARD_CAP_CLOSED)
_register("saturation-certificates", "Prop. IX: x_{i_{r-1}+1} delta_ij = x_{j+1} delta_{i,i_{r-1}} + x_{i+1} delta_{i_{r-1},j}",
          fam_connected, check_saturation_certificates, 6, HARD_CAP_ALL)
_register("saturation", "Prop. IX: I_X = I_G : x^infinity for connected G",
          fam_connected_closed_2, check_saturation, 5, 6)
_register("minimal-primes", "Theorem minimal: Min(I_G) = {I_X, (x_2,...,x_n)}",
          fam_minimal_primes, check_minimal_primes, 6, 6, level="evidence", uses_q=True)
_register("radical", "Prop. radical: I_G radical iff G = K_n or Delta(G) = <[1,n-1],[2,n]>",
          fam_connected_closed_2, check_radical, 6, 7)
_register("stci", "Cor. stci: sqrt(I_G) = sqrt(I_{P_n}), height n - 1",
          fam_connected_closed_2, check_stci, 6, 7)
_register("regularity-bound", "Theorem reg: reg(S/I_G) <= r, the number of maximal cliques",
          fam_closed, check_regularity_bound, 7, HARD_CAP_CLOSED)
_register("remark-family", "Remark regr: P(t) = prod (1 + (a_{i+1} - a_i) t), reg = r",
          fam_remark, check_remark_family, 8, 10)
_register("two-cliques", "Corollary: closed G with two maximal cliques has reg(S/I_G) = 2",
          fam_two_cliques, check_two_cliques, 8, HARD_CAP_CLOSED)
_register("final-example", "Example: cliques [1,4],[3,5],[4,6] give reg(S/I_G) = 2 < 3",
          lambda p: [(6, FINAL_EXAMPLE.mask())], check_final_example, 6, 6)
_register("linear-resolution", "Prop. linres (a)<=>(b): I_G has a linear resolution iff G is complete",
          fam_closed, check_linear_resolution, 6, HARD_CAP_CLOSED)
_register("quadric-count", "Lemma exerc input: dim_K (I_G)_2 = |E(G)| by exact rank",
          fam_all, check_quadric_count, 5, 6)
_register("engine", "Engine self-checks: Hilbert counts, Macaulay agreement, GB idempotence, Krull agreement",
          fam_all, check_engine, 5, 6)


def _run_case(args):
    name, case = args
    ok, expected, actual = SUITES[name].checker(case)
    return ok, expected, actual


def run_suite(name: str, max_n: Optional[int] = None, q: Optional[List[int]] = None,
              workers: int = 1, **extra) -> TheoremReport:
    """Run a registered suite; refuses parameters above the suite's hard cap."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    suite = SUITES[name]
    max_n = suite.default_n if max_n is None else max_n
    if max_n > suite.cap:
        raise SizeLimitError(f"suite {name!r} refuses max_n={max_n} (cap {suite.cap})")
    params: Dict = {"max_n": max_n}
    if suite.uses_q:
        params["q"] = list(q or [3, 5])
    if name == "gb-closed":
        params["sample_n"] = extra.get("sample_n", 6 if max_n < 6 else None)
        if params["sample_n"] is None:
            params.pop("sample_n")
        else:
            params["sample"] = extra.get("sample", GB_SAMPLE_SIZE)
            params["seed"] = extra.get("seed", GB_SAMPLE_SEED)
    start = time.perf_counter()
    cases = list(suite.family(params))
    report = TheoremReport(name, suite.anchor, params, level=suite.level)
    jobs = [(name, c) for c in cases]
    if workers > 1 and len(jobs) > 1:
        with Pool(workers) as pool:
            results = pool.map(_run_case, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
    else:
        results = [_run_case(j) for j in jobs]
    for case, (ok, expected, actual) in zip(cases, results):
        report.cases_run += 1
        if ok:
            report.cases_passed += 1
        else:
            label = graph_label(remark_family_graph(case[2])) if name == "remark-family" else graph_label(_graph(case))
            if name == "minimal-primes":
                label += f" q={case[2]}"
            report.counterexamples.append({"graph": label, "expected": expected, "actual": actual})
    if suite.level == "evidence":
        report.notes.append("finite-field point equality is evidence, not proof")
    report.wall_time = time.perf_counter() - start
    return report
