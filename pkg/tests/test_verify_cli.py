"""Tests for the verification suites and the command line front end."""

import json
import pickle

import pytest

from sfvs.verify_cli import (
    SCHEMA_VERSION,
    SUITES,
    VerificationError,
    VerificationReport,
    _parse_values,
    main,
    render_json,
    render_table,
    run_suite,
)


def strip_runtime(reports):
    return [
        (r.suite, r.family, r.p, r.n, r.check, r.predicted, r.constructed, r.exact, r.status)
        for r in reports
    ]


def sample_report(**overrides):
    base = dict(
        suite="counts",
        family="s",
        p=3,
        n=2,
        check="order",
        predicted=9,
        constructed=9,
        exact=None,
        status="match",
        runtime_ms=1,
    )
    base.update(overrides)
    return VerificationReport(**base)


# suites


def test_tau_formula_suite_grid():
    reports = run_suite("thm2.4", [2, 3], [1, 2, 3])
    assert len(reports) == 6
    assert all(r.status == "match" for r in reports)
    assert all(r.check == "tau" for r in reports)
    assert [r.predicted for r in reports] == [0, 0, 0, 1, 3, 9]
    assert [(r.p, r.n) for r in reports] == [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)]


def test_counts_suite_covers_every_family():
    reports = run_suite("counts", [3], [2])
    assert len(reports) == 8
    assert {(r.family, r.check) for r in reports} == {
        (fam, check)
        for fam in ("s", "plus", "pp", "hat")
        for check in ("order", "size")
    }
    hat_order = next(r for r in reports if r.family == "hat" and r.check == "order")
    assert (hat_order.predicted, hat_order.constructed) == (15, 15)
    assert hat_order.status == "match"


def test_apex_formula_suite_with_solver():
    reports = run_suite("cor2.7", [2, 3], [2], exact=True)
    assert strip_runtime(reports) == [
        ("cor2.7", "plus", 2, 2, "tau", 1, 1, 1, "match"),
        ("cor2.7", "plus", 3, 2, "tau", 3, 3, 3, "match"),
    ]


def test_extra_copy_formula_suite_with_solver():
    reports = run_suite("cor2.8", [3], [2], exact=True)
    assert strip_runtime(reports) == [
        ("cor2.8", "pp", 3, 2, "tau", 4, 4, 4, "match"),
    ]


def test_triangle3_suite():
    reports = run_suite("thm3.2", [3], [0, 1, 2], exact=True)
    assert [r.predicted for r in reports] == [1, 2, 5]
    assert all(r.status == "match" for r in reports)
    assert all(r.exact == r.predicted for r in reports)


def test_linear_forest_suite_checks():
    reports = run_suite("thm4.1", [4], [3])
    assert [r.check for r in reports] == ["order", "recurrence", "structure"]
    assert all(r.status == "match" for r in reports)
    assert reports[0].predicted == 65


def test_conjecture_suite_is_bound_only_without_solver():
    reports = run_suite("conjecture", [4], [2])
    (row,) = reports
    assert row.check == "forest"
    assert row.predicted == 18
    assert row.constructed == 18
    assert row.exact is None
    assert row.status == "bound-only"


def test_conjecture_suite_with_solver():
    (row,) = run_suite("conjecture", [4], [2], exact=True)
    assert row.exact == 18
    assert row.status == "match"


def test_parallel_runs_match_serial():
    serial = run_suite("counts", [3], [1, 2])
    parallel = run_suite("counts", [3], [1, 2], jobs=2)
    assert strip_runtime(serial) == strip_runtime(parallel)


@pytest.mark.parametrize(
    "suite,ps,ns",
    [
        ("counts", [1], [1]),
        ("counts", [2], [0]),
        ("thm2.4", [2], [0]),
        ("cor2.7", [3], [1]),
        ("cor2.8", [3], [1]),
        ("thm3.2", [4], [1]),
        ("thm3.2", [3], [-1]),
        ("thm4.1", [3], [3]),
        ("thm4.1", [4], [2]),
        ("conjecture", [3], [2]),
        ("nope", [3], [2]),
    ],
)
def test_suite_parameter_validation(suite, ps, ns):
    with pytest.raises(ValueError):
        run_suite(suite, ps, ns)


def test_suite_list_is_stable():
    assert SUITES == (
        "counts",
        "thm2.4",
        "cor2.7",
        "cor2.8",
        "thm3.2",
        "thm4.1",
        "conjecture",
    )


# rendering


def test_render_table_empty():
    assert render_table([]) == ""


def test_render_table_glyphs_and_columns():
    rows = [
        sample_report(),
        sample_report(check="size", predicted=12, constructed=13, status="mismatch"),
        sample_report(exact=None, status="bound-only"),
    ]
    text = render_table(rows)
    assert "✓" in text and "✗" in text and "∙" in text
    header = text.splitlines()[0]
    for column in ("suite", "family", "p", "n", "check", "status", "ms"):
        assert column in header
    assert " - " in text  # missing exact renders as a dash


def test_render_json_round_trip():
    rows = [sample_report()]
    payload = json.loads(render_json(rows))
    assert payload["schema"] == SCHEMA_VERSION
    assert payload["reports"] == [
        {
            "suite": "counts",
            "family": "s",
            "p": 3,
            "n": 2,
            "check": "order",
            "predicted": 9,
            "constructed": 9,
            "exact": None,
            "status": "match",
            "runtime_ms": 1,
        }
    ]


# value parsing


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3", [3]),
        ("2,5", [2, 5]),
        ("4:6", [4, 5, 6]),
        ("2,4:6", [2, 4, 5, 6]),
        ("5,5,5", [5]),
    ],
)
def test_parse_values(text, expected):
    assert _parse_values(text) == expected


@pytest.mark.parametrize("bad", ["", "2,,3", "6:4", "x", "1:b"])
def test_parse_values_rejects(bad):
    with pytest.raises(ValueError):
        _parse_values(bad)


# errors


def test_verification_error_pickles():
    err = VerificationError("broken", cycle=["a", "b", "c", "a"])
    clone = pickle.loads(pickle.dumps(err))
    assert isinstance(clone, VerificationError)
    assert clone.cycle == ["a", "b", "c", "a"]
    assert "broken" in str(clone)


# command line


def test_cli_generate_edges(capsys):
    assert main(["generate", "--family", "s", "-p", "2", "-n", "2"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert "00\t01" in lines
    assert len(lines) == 3  # the level-2 path has three edges


def test_cli_generate_dot(capsys):
    assert main(["generate", "--family", "hat", "-p", "3", "-n", "0", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph")
    assert '"^0" -- "^1"' in out


def test_cli_forest_reports_size(capsys):
    assert main(["forest", "--family", "hat", "-p", "4", "-n", "2"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[-1] == "size=18 complement=16 acyclic=true"
    assert len(out) == 19


def test_cli_forest_structure_json(capsys):
    assert main(["forest", "--family", "hat", "-p", "4", "-n", "3", "--structure"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert payload["total"] == 65
    assert payload["actual_paths"] == [[17, 2], [31, 1]]


def test_cli_forest_structure_rejects_other_families(capsys):
    assert main(["forest", "--family", "s", "-p", "3", "-n", "2", "--structure"]) == 2
    assert "hat" in capsys.readouterr().err


def test_cli_tau(capsys):
    assert main(["tau", "--family", "hat", "-p", "4", "-n", "1"]) == 0
    assert capsys.readouterr().out.startswith("tau=4 optimal=true witness=")
    assert main(["tau", "--family", "s", "-p", "3", "-n", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("tau=9 optimal=true witness=")
    witness = out.strip().split("witness=")[1].split(",")
    assert len(witness) == 9
    assert all(len(w) == 3 for w in witness)


def test_cli_tau_brute(capsys):
    assert main(["tau", "--family", "s", "-p", "3", "-n", "2", "--method", "brute"]) == 0
    assert capsys.readouterr().out.startswith("tau=3 optimal=true")


def test_cli_verify_table(capsys):
    assert main(["verify", "--suite", "thm2.4", "-p", "3", "-n", "1:2"]) == 0
    out = capsys.readouterr().out
    assert out.count("✓") == 2
    assert "thm2.4" in out


def test_cli_verify_json_and_report_round_trip(tmp_path, capsys):
    path = tmp_path / "run.json"
    code = main(
        [
            "verify",
            "--suite",
            "counts",
            "-p",
            "3",
            "-n",
            "1",
            "--format",
            "json",
            "--out",
            str(path),
        ]
    )
    assert code == 0
    assert capsys.readouterr().out == ""
    assert main(["report", str(path)]) == 0
    assert "✓" in capsys.readouterr().out


def test_cli_report_flags_mismatch(tmp_path, capsys):
    bad = sample_report(constructed=10, status="mismatch")
    path = tmp_path / "bad.json"
    path.write_text(render_json([bad]), encoding="utf-8")
    assert main(["report", str(path)]) == 1
    assert "✗" in capsys.readouterr().out


def test_cli_report_rejects_wrong_schema(tmp_path, capsys):
    path = tmp_path / "old.json"
    path.write_text(json.dumps({"schema": 99, "reports": []}), encoding="utf-8")
    assert main(["report", str(path)]) == 2
    assert "schema" in capsys.readouterr().err


def test_cli_report_rejects_malformed_entries(tmp_path, capsys):
    path = tmp_path / "trash.json"
    path.write_text(
        json.dumps({"schema": SCHEMA_VERSION, "reports": [{"suite": "counts"}]}),
        encoding="utf-8",
    )
    assert main(["report", str(path)]) == 2
    assert "malformed" in capsys.readouterr().err


def test_cli_report_missing_file(capsys):
    assert main(["report", "/no/such/file.json"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_cli_verify_rejects_bad_grid(capsys):
    assert main(["verify", "--suite", "thm4.1", "-p", "3", "-n", "3"]) == 2
    assert "thm4.1" in capsys.readouterr().err
