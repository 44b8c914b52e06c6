"""Repro corpus, consistency table, property sweeps, CLI surface."""

import io
from contextlib import redirect_stdout

import pytest

from entwb.cli import classify_scenario, main
from entwb.harness import (
    SCENARIO_TEXTS,
    ReproReport,
    CheckRow,
    corpus,
    generate_table1,
    props_report,
    run_repro_suite,
)
from entwb.scenario import parse_scenario, print_scenario

SEED = 20240901


@pytest.fixture(scope="module")
def report():
    return run_repro_suite(SEED)


def test_corpus_round_trips_through_printer():
    for sid, text in SCENARIO_TEXTS.items():
        s1 = parse_scenario(text)
        printed = print_scenario(s1)
        s2 = parse_scenario(printed)
        assert s1.asts == s2.asts, sid
        assert s1.expectations == s2.expectations, sid
        assert print_scenario(s2) == printed, sid


def test_corpus_ids_match_registry():
    ids = [sid for sid, _ in corpus()]
    assert len(ids) == len(set(ids))
    for sid in SCENARIO_TEXTS:
        assert sid in ids, f"registered text {sid} has no corpus runner"


def test_repro_suite_all_green(report):
    assert report.failures() == []
    assert len(report.rows) > 150


def test_repro_suite_deterministic(report):
    again = run_repro_suite(SEED)
    assert again.to_csv() == report.to_csv()


def test_scenario_expectations_agree_with_classifiers():
    # every expect_separable_<D> declared in the corpus is honored
    checked = 0
    for sid, text in SCENARIO_TEXTS.items():
        s = parse_scenario(text)
        for name, expected in s.expectations.items():
            if not name.startswith("separable_"):
                continue
            definition = name.split("_", 1)[1]
            verdict = classify_scenario(s, definition)
            assert verdict.separable == bool(expected), (sid, definition)
            checked += 1
    assert checked >= 10


def test_table1_pattern(report):
    table = generate_table1(SEED, report)
    assert table.marks() == {
        "I": ("fail", "fail", "open"),
        "II": ("fail", "fail", "fail"),
        "III": ("pass", "pass", "fail"),
        "IV": ("fail", "pass", "fail"),
        "V": ("pass", "pass", "pass"),
    }
    csv = table.to_csv()
    assert "I,✗,✗,?" in csv
    assert "V,✓,✓,✓" in csv
    md = table.to_markdown()
    assert "entanglement-IV | ✗ | ✓ | ✗" in md


def test_table1_backing_cells_cite_green_scenarios(report):
    table = generate_table1(SEED, report)
    for (d, c), ids in table.backing.items():
        mark = table.cells[(d, c)]
        if mark == "open":
            continue
        assert ids, (d, c)
        for sid in ids:
            assert report.scenario_passed(sid), (d, c, sid)
    assert len(table.backing[("V", "local operators")]) >= 50


def test_table1_refuses_on_failed_backing(report):
    broken = ReproReport(seed=report.seed, rows=list(report.rows))
    broken.rows.append(CheckRow("merge-beam", "sabotage", "0", "1", False))
    with pytest.raises(RuntimeError, match="merge-beam"):
        generate_table1(SEED, broken)


def test_props_report_small():
    rows = props_report(SEED, samples=10)
    assert all(ok for _, _, _, ok in rows), rows


# --- CLI ---------------------------------------------------------------------


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def test_cli_classify_and_check(tmp_path):
    path = _write(tmp_path, "pair.ent", SCENARIO_TEXTS["sep5-cross-pair-fermi"])
    out = io.StringIO()
    with redirect_stdout(out):
        status = main(["classify", "--scenario", path, "--definition", "V"])
    assert status == 0
    assert "separable" in out.getvalue()

    path = _write(tmp_path, "bell.ent", SCENARIO_TEXTS["bell-projectors"])
    out = io.StringIO()
    with redirect_stdout(out):
        status = main(["check", "--scenario", path])
    assert status == 0
    assert "correlated" in out.getvalue()


def test_cli_classify_detects_expectation_mismatch(tmp_path):
    text = SCENARIO_TEXTS["sep5-cross-pair-fermi"].replace(
        "expect_separable_V = true", "expect_separable_V = false"
    )
    path = _write(tmp_path, "bad.ent", text)
    out = io.StringIO()
    with redirect_stdout(out):
        status = main(["classify", "--scenario", path, "--definition", "V"])
    assert status == 1
    assert "FAIL" in out.getvalue()


def test_cli_qfi(tmp_path):
    text = """
id = qfi-demo
statistics = bose
modes = m0; m1
state = adag(m0)*adag(m1)|vac>
G = 0.5*adag(m0)*a(m1) + 0.5*adag(m1)*a(m0)
expect_qfi = 4
"""
    path = _write(tmp_path, "qfi.ent", text)
    out = io.StringIO()
    with redirect_stdout(out):
        status = main(["qfi", "--scenario", path])
    assert status == 0
    assert "QFI = 4" in out.getvalue()


def test_cli_errors_are_clean(tmp_path):
    with pytest.raises(SystemExit):
        main(["classify", "--scenario", "/nonexistent", "--definition", "I"])
    path = _write(tmp_path, "broken.ent", "id = x\nmodes = a\nstate = adag(a\n")
    with pytest.raises(SystemExit, match="line"):
        main(["classify", "--scenario", path, "--definition", "I"])
