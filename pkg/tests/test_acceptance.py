"""Acceptance criteria, one test each, run at their stated scope and tolerance.

Every test records a single ``criterion N: PASS|FAIL`` line, printed in the
pytest terminal summary (and on stdout when run as a script).  Criteria are
checked literally: when a statement is false on part of its stated family the
test fails and the line names the counterexamples.
"""

from __future__ import annotations

import sys
import time
from math import comb

import pytest

from scrollbei.suites import run_suite

RESULTS: dict = {}


def record(num: int, title: str, ok: bool, detail: str):
    RESULTS[num] = f"criterion {num:2d} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    return ok


def summarize(reports):
    parts = []
    for r in reports:
        part = f"{r.suite} {r.cases_passed}/{r.cases_run}"
        if r.counterexamples:
            first = r.counterexamples[0]
            part += f" (e.g. {first['graph']}: expected {first['expected']}, got {first['actual']})"
        parts.append(part)
    return "; ".join(parts)


def check(num, title, reports, extra_ok=True, extra=""):
    ok = all(r.passed for r in reports) and extra_ok
    detail = summarize(reports) + (f"; {extra}" if extra else "")
    record(num, title, ok, detail)
    assert ok, RESULTS[num]


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_01_figure_2_dimensions():
    rep, secs = timed(lambda: run_suite("figure2-dim"))
    check(1, "Figure 2 dimensions 3 and 4", [rep], secs < 1.0, f"{secs:.2f}s (limit 1s)")


def test_criterion_02_gb_iff_closed():
    rep, secs = timed(lambda: run_suite("gb-closed", max_n=5))
    expected_runs = sum(2 ** comb(n, 2) for n in range(1, 6)) + 5000
    check(2, "Theorem GB equivalence, all graphs n<=5 plus 5000 at n=6", [rep],
          rep.cases_run == expected_runs and secs < 120,
          f"{len(rep.counterexamples)} counterexamples, {rep.cases_run} cases, {secs:.0f}s (limit 120s)")


def test_criterion_03_initial_ideal_and_dimension():
    (reps, secs) = timed(lambda: [run_suite("initial-ideal", max_n=8), run_suite("dimension", max_n=7)])
    check(3, "initial ideal n<=8 connected, dim = 1 + c for closed n<=7", reps,
          secs < 300, f"{secs:.0f}s (limit 300s)")


def test_criterion_04_saturation():
    reps = [run_suite("saturation-certificates", max_n=6), run_suite("saturation", max_n=5)]
    check(4, "saturation certificates n<=6, I_G : x^inf = I_X n<=5", reps)


def test_criterion_05_minimal_primes():
    rep = run_suite("minimal-primes", max_n=6, q=[3, 5])
    check(5, "V(I_G) = V(I_X) u V(x_2..x_n) over F_3, F_5 (evidence)", [rep],
          rep.level == "evidence")


def test_criterion_06_radical():
    check(6, "I_G radical iff K_n or <[1,n-1],[2,n]>", [run_suite("radical", max_n=6)])


def test_criterion_07_stci():
    check(7, "sqrt(I_G) = sqrt(I_{P_n}) and height n-1, connected closed n<=6",
          [run_suite("stci", max_n=6)])


def test_criterion_08_regularity():
    reps, secs = timed(lambda: [
        run_suite("regularity-bound", max_n=7),
        run_suite("remark-family", max_n=8),
        run_suite("final-example"),
        run_suite("two-cliques", max_n=8),
    ])
    check(8, "reg <= r for closed n<=7, Remark family, Example, two cliques", reps,
          secs < 300, f"{secs:.0f}s (limit 300s)")


def test_criterion_09_linear_resolution_and_quadrics():
    reps = [run_suite("linear-resolution", max_n=6), run_suite("quadric-count", max_n=5)]
    check(9, "linear resolution iff complete n<=6, dim (I_G)_2 = |E| n<=5", reps)


def test_criterion_10_engine_self_checks():
    check(10, "Hilbert counts, Macaulay agreement, GB idempotence, Krull agreement",
          [run_suite("engine", max_n=5)])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
