"""Command-line surface: formats, exit codes, determinism, harness sensitivity."""

import json

from swplumb import verify
from swplumb.cli import main
from swplumb.report import compute_report, report_from_json, report_to_json
from swplumb.corpus import chain_graph


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, doc, name="graph.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


GOOD = {"vertices": [{"id": "v0", "euler": -2}, {"id": "v1", "euler": -2}],
        "edges": [["v0", "v1"]]}

CYCLIC = {"vertices": [{"id": "a", "euler": -2}, {"id": "b", "euler": -2},
                       {"id": "c", "euler": -2}],
          "edges": [["a", "b"], ["b", "c"], ["c", "a"]]}


def test_graph_table_output(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "graph", write_graph(tmp_path, GOOD))
    assert code == 0
    assert "sw0(canonical)" in out and "1/4" in out
    assert "|H|" in out and "3" in out


def test_graph_json_round_trip(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "graph", write_graph(tmp_path, GOOD),
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["sw0"] == {"num": 1, "den": 4}
    assert doc["conjecture_gap"] == {"num": 0, "den": 1}


def test_graph_determinism(tmp_path, capsys):
    path = write_graph(tmp_path, GOOD)
    _, out1, _ = run_cli(capsys, "graph", path, "--format", "json")
    _, out2, _ = run_cli(capsys, "graph", path, "--format", "json")
    assert out1 == out2


def test_cyclic_graph_exit_code(tmp_path, capsys):
    code, _, err = run_cli(capsys, "graph", write_graph(tmp_path, CYCLIC))
    assert code == 1
    assert "NotATree" in err


def test_malformed_json_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{nope")
    code, _, err = run_cli(capsys, "graph", str(path))
    assert code == 1
    assert "line" in err


def test_indefinite_graph_exit_code(tmp_path, capsys):
    doc = {"vertices": [{"id": "v0", "euler": 1}], "edges": []}
    code, _, err = run_cli(capsys, "graph", write_graph(tmp_path, doc))
    assert code == 1
    assert "NotNegativeDefinite" in err


def test_order_cap_exit_code(tmp_path, capsys):
    code, _, err = run_cli(capsys, "graph", write_graph(tmp_path, GOOD),
                           "--max-order", "2")
    assert code == 2
    assert "cap" in err


def test_all_spinc_table(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "graph", write_graph(tmp_path, GOOD),
                           "--all-spinc")
    assert code == 0
    assert out.count("h = ") == 3


def test_lens_command(capsys):
    code, out, _ = run_cli(capsys, "lens", "3", "2")
    assert code == 0
    assert "1/4" in out
    assert "MISMATCH" not in out
    assert out.count("MATCH") == 3


def test_lens_bad_arguments(capsys):
    code, _, err = run_cli(capsys, "lens", "4", "2")
    assert code == 1
    assert "coprime" in err


def test_seifert_command(capsys):
    code, out, _ = run_cli(capsys, "seifert", "--b", "-2", "--arm", "2/1",
                           "--arm", "3/2", "--arm", "4/3")
    assert code == 0
    assert "KS = 7" in out
    assert "7/8" in out
    assert "MISMATCH" not in out


def test_seifert_bad_arm(capsys):
    code, _, err = run_cli(capsys, "seifert", "--b", "-2", "--arm", "nope")
    assert code == 1


def test_brieskorn_command(capsys):
    code, out, _ = run_cli(capsys, "brieskorn", "2", "3", "5")
    assert code == 0
    assert "sigma" in out and "-8" in out
    assert "MISMATCH" not in out


def test_brieskorn_rejects_positive_genus(capsys):
    code, _, err = run_cli(capsys, "brieskorn", "2", "2", "2", "2")
    assert code == 1
    assert "genus" in err


def test_brieskorn_rejects_prism_type_links(capsys):
    # fewer than three nontrivial arms: out of scope for the star pipeline
    code, _, err = run_cli(capsys, "brieskorn", "4", "2", "2")
    assert code == 1
    assert "arms" in err


def test_dedekind_command(capsys):
    code, out, _ = run_cli(capsys, "dedekind", "2", "3")
    assert code == 0
    assert "-1/18" in out and "MATCH" in out
    code, out, _ = run_cli(capsys, "dedekind", "1", "2", "--y", "1/2",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == {"num": 1, "den": 8}
    assert doc["oracle_agrees"] is True


def test_verify_list(capsys):
    code, out, _ = run_cli(capsys, "verify", "--list")
    assert code == 0
    names = out.strip().splitlines()
    assert len(names) >= 12
    assert "01-lens-spaces" in names


def test_report_json_round_trip():
    report = compute_report(chain_graph([-2, -2, -2]), all_spinc=True)
    assert report_from_json(report_to_json(report)) == report
    assert report.sw0 == report.torsion_at_1 - report.casson_walker / report.order_h
    assert report.conjecture_gap == report.sw0 - report.k2_plus_nv / 8
    assert dict(report.spinc_table)[(0,) * len(report.invariant_factors)] == report.sw0


def test_harness_detects_a_corrupted_fast_path(monkeypatch):
    # a wrong Dedekind fast path must fail the lens fixture
    from fractions import Fraction
    import swplumb.dedekind as ded
    real = ded.dr_sum

    def skewed(h, k, x=0, y=0):
        return real(h, k, x, y) + Fraction(1, 7)

    monkeypatch.setattr(ded, "dr_sum", skewed)
    rows = dict(verify.FIXTURES)["01-lens-spaces"]()
    assert any(not passed for _, passed, _ in rows)


def test_verify_run_subset(capsys):
    assert verify.run(names=["02-minus-two-chains"])
    out = capsys.readouterr().out
    assert "[PASS]" in out and "all fixtures passed" in out


def test_verify_cli_reports_failures(monkeypatch, capsys):
    fake = (("00-fake", lambda: [("broken check", False, "boom")]),)
    monkeypatch.setattr(verify, "FIXTURES", fake)
    code, out, _ = run_cli(capsys, "verify")
    assert code == 1
    assert "[FAIL]" in out
