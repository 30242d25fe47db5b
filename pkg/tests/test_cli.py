from __future__ import annotations

import json

import pytest

from scrollbei.cli import main, show_data
from scrollbei.graphs import LabeledGraph
from scrollbei.suites import FIGURE_2A, FIGURE_2B, SCHEMA_VERSION, run_suite
from scrollbei.graphio import format_graph

REPORT_KEYS = {"schema_version", "suite", "anchor", "level", "parameters", "cases_run",
               "cases_passed", "passed", "counterexamples", "notes"}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_show_dim_figure_2(tmp_path, capsys):
    for G, expect in [(FIGURE_2A, 3), (FIGURE_2B, 4)]:
        f = tmp_path / "g.txt"
        f.write_text(format_graph(G))
        code, out, _ = run(capsys, "show", "dim", "--file", str(f), "--json")
        assert code == 0 and json.loads(out)["dim"] == expect


def test_show_hilbert_line(tmp_path, capsys):
    f = tmp_path / "p4.txt"
    f.write_text("n 4\ne 1 2\ne 2 3\ne 3 4\n")
    code, out, _ = run(capsys, "show", "hilbert", "--file", str(f), "--json")
    assert json.loads(out)["numerator_coefficients"] == [1, 3, 3, 1]


def test_show_regularity_example(capsys):
    code, out, _ = run(capsys, "show", "regularity", "--cliques", "[1,4]", "[3,5]", "[4,6]")
    assert code == 0 and "reg: 2" in out and "r: 3" in out


def test_show_not_closed(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text(format_graph(FIGURE_2A))
    code, _, err = run(capsys, "show", "regularity", "--file", str(f))
    assert code == 2 and "not closed" in err


@pytest.mark.parametrize("what", ["groebner", "initial", "primes", "certificates"])
def test_show_other_commands(capsys, what):
    code, out, _ = run(capsys, "show", what, "--cliques", "[1,3]", "[2,4]", "--json")
    d = json.loads(out)
    assert code == 0 and d["schema_version"] == SCHEMA_VERSION and d["command"] == what


def test_show_certificates_verified():
    d = show_data("certificates", LabeledGraph.path(5))
    assert len(d["saturation"]) == 10 and all(c["verified"] for c in d["saturation"])


def test_parse_error_exit(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("n 3\ne 1 1\n")
    code, _, err = run(capsys, "show", "dim", "--file", str(f))
    assert code == 2 and "line 2" in err


def test_verify_pass_and_golden_schema(capsys):
    code, out, _ = run(capsys, "verify", "final-example", "--json")
    d = json.loads(out)
    assert code == 0
    assert set(d) == REPORT_KEYS
    assert d == {
        "schema_version": 1,
        "suite": "final-example",
        "anchor": "Example: cliques [1,4],[3,5],[4,6] give reg(S/I_G) = 2 < 3",
        "level": "exact",
        "parameters": {"max_n": 6},
        "cases_run": 1,
        "cases_passed": 1,
        "passed": True,
        "counterexamples": [],
        "notes": [],
    }


def test_verify_counterexample_exit(capsys):
    code, out, _ = run(capsys, "verify", "linear-resolution", "--max-n", "3")
    assert code == 1 and "result: FAIL" in out and "n=3 edges=[1-2]" in out


def test_verify_refuses_above_cap(capsys):
    code, _, err = run(capsys, "verify", "gb-closed", "--max-n", "9")
    assert code == 2 and "refuse" in err


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "no-such-suite"])
    assert info.value.code == 2


def test_minimal_primes_evidence_flag(capsys):
    code, out, _ = run(capsys, "verify", "minimal-primes", "--max-n", "4", "--q", "3", "--json")
    d = json.loads(out)
    assert code == 0 and d["level"] == "evidence" and d["parameters"]["q"] == [3]


def test_reports_deterministic_across_workers():
    a = run_suite("radical", max_n=5).to_json()
    b = run_suite("radical", max_n=5, workers=2).to_json()
    c = run_suite("radical", max_n=5).to_json()
    assert a == b == c


def test_gb_closed_case_count():
    rep = run_suite("gb-closed", max_n=3, sample_n=None)
    assert rep.cases_run == 1 + 2 + 8
