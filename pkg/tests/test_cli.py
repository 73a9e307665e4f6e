"""End-to-end command-line tests driven through main()."""

import csv
import io
import json

import pytest

from goldenseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------- seq/term


def test_seq_text(capsys):
    code, out, err = run(capsys, "seq", "--preset", "fibonacci", "--count", "6")
    assert code == 0
    assert err == ""
    assert out == "0\n1\n1\n2\n3\n5\n"


def test_seq_count_zero_prints_nothing(capsys):
    code, out, err = run(capsys, "seq", "--preset", "fibonacci", "--count", "0")
    assert code == 0
    assert out == ""


def test_seq_csv(capsys):
    code, out, _ = run(
        capsys, "seq", "--preset", "lucas", "--count", "6", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["2", "1", "3", "4", "7", "11"]]


def test_seq_json_roundtrip(capsys):
    code, out, _ = run(
        capsys, "seq", "--preset", "tribonacci", "--count", "11", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == ["1", "1", "1"]
    assert payload["seeds"] == ["0", "1", "1"]
    assert payload["terms"] == [
        "0", "1", "1", "2", "4", "7", "13", "24", "44", "81", "149",
    ]


def test_seq_explicit_rational_coeffs(capsys):
    code, out, _ = run(
        capsys, "seq", "--coeffs", "1/2,1/2", "--seeds", "1,2", "--count", "4"
    )
    assert code == 0
    assert out.splitlines() == ["1", "2", "3/2", "7/4"]


def test_term_large_index_exact(capsys):
    code, out, _ = run(capsys, "term", "--preset", "fibonacci", "--k", "50")
    assert code == 0
    assert out == "12586269025\n"


def test_term_json(capsys):
    code, out, _ = run(
        capsys, "term", "--preset", "fibonacci", "--k", "100", "--format", "json"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["k"] == 100
    assert payload["term"] == "354224848179261915075"


# ----------------------------------------------------------------- roots


def test_roots_text_marks_dominant(capsys):
    code, out, _ = run(capsys, "roots", "--coeffs", "1,1")
    assert code == 0
    lines = out.splitlines()
    assert "1.618033988749895" in lines[0]
    assert "<- dominant" in lines[0]
    assert lines[-1] == "dominance: unique"


def test_roots_text_reports_tie(capsys):
    code, out, _ = run(capsys, "roots", "--coeffs=-1,0")
    assert code == 0
    assert "tied largest modulus" in out


def test_roots_json(capsys):
    code, out, _ = run(capsys, "roots", "--preset", "tribonacci", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["dominant_index"] == 0
    assert payload["dominance_unique"] is True
    assert payload["roots"][0]["re"] == pytest.approx(1.8392867552141611, abs=1e-12)
    assert payload["roots"][0]["im"] == 0.0
    assert all(r < 1e-9 for r in payload["residuals"])


def test_roots_extended_json_uses_decimal_strings(capsys):
    code, out, _ = run(
        capsys, "roots", "--coeffs", "1,1", "--precision", "extended",
        "--format", "json",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["precision"] == "extended"
    dominant = payload["roots"][0]["re"]
    assert isinstance(dominant, str)
    assert dominant.startswith("1.6180339887498948482")


# ----------------------------------------------------------------- binet


def test_binet_text_rounds_to_term(capsys):
    code, out, _ = run(capsys, "binet", "--preset", "fibonacci", "--k", "10")
    assert code == 0
    assert "rounded = 55" in out
    assert "constant probe" in out


def test_binet_json(capsys):
    code, out, _ = run(
        capsys, "binet", "--preset", "lucas", "--k", "9", "--format", "json"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["rounded"] == "76"
    assert payload["weights"][0]["re"] == pytest.approx(1.0, abs=1e-9)
    assert payload["weights"][1]["re"] == pytest.approx(1.0, abs=1e-9)
    assert abs(payload["constant"]["re"]) < 1e-9


# ----------------------------------------------------------------- genfunc


def test_genfunc_text_display(capsys):
    code, out, _ = run(capsys, "genfunc", "--preset", "fibonacci")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "f(z) = z/(1 - z - z^2)"
    assert lines[1] == "series: 0, 1, 1, 2, 3, 5, 8, 13"


def test_genfunc_json(capsys):
    code, out, _ = run(
        capsys, "genfunc", "--preset", "lucas", "--count", "5", "--format", "json"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["display"] == "(2 - z)/(1 - z - z^2)"
    assert payload["series"] == ["2", "1", "3", "4", "7"]


# ----------------------------------------------------------------- trapezoid


def test_trapezoid_text_rows(capsys):
    code, out, _ = run(capsys, "trapezoid", "--preset", "pell", "--rows", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[0] == "0 1"
    assert lines[-1] == "0 8 12 6 1"


def test_trapezoid_closed_method_agrees(capsys):
    code, expansion, _ = run(
        capsys, "trapezoid", "--preset", "tribonacci", "--rows", "5"
    )
    assert code == 0
    code, closed, _ = run(
        capsys, "trapezoid", "--preset", "tribonacci", "--rows", "5",
        "--method", "closed",
    )
    assert code == 0
    assert closed == expansion


def test_trapezoid_json(capsys):
    code, out, _ = run(
        capsys, "trapezoid", "--preset", "fibonacci", "--rows", "3",
        "--format", "json",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["method"] == "expansion"
    assert payload["rows"] == [["0", "1"], ["0", "1", "1"], ["0", "1", "2", "1"]]


# ----------------------------------------------------------------- rowsum


def test_rowsum_text_doubles_for_fibonacci(capsys):
    code, out, _ = run(capsys, "rowsum", "--preset", "fibonacci", "--rows", "5")
    assert code == 0
    assert out.splitlines() == [
        "row 0: 1", "row 1: 2", "row 2: 4", "row 3: 8", "row 4: 16",
    ]


def test_rowsum_csv(capsys):
    code, out, _ = run(
        capsys, "rowsum", "--preset", "lucas", "--rows", "4", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 1 and len(rows[0]) == 4


# ----------------------------------------------------------------- converge


def test_converge_text_fibonacci(capsys):
    code, out, _ = run(capsys, "converge", "--preset", "fibonacci")
    assert code == 0
    assert "converged = yes" in out
    assert "1.618033988749" in out


def test_converge_text_tied_dominance(capsys):
    code, out, _ = run(capsys, "converge", "--coeffs=-1,0", "--seeds", "1,1")
    assert code == 0
    assert "converged = no" in out
    assert "tie" in out


def test_converge_json(capsys):
    code, out, _ = run(
        capsys, "converge", "--preset", "pell", "--format", "json"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["converged"] is True
    assert payload["hypothesis_met"] is True
    assert payload["final_estimate"] == pytest.approx(2.414213562373095, abs=1e-8)


# ----------------------------------------------------------------- verify


def test_verify_fibonacci_all_pass(capsys):
    code, out, _ = run(capsys, "verify", "--preset", "fibonacci")
    assert code == 0
    assert "fail" not in out


def test_verify_tribonacci_flags_cubic_formula(capsys):
    code, out, _ = run(capsys, "verify", "--preset", "tribonacci")
    assert code == 1
    failing = [
        line for line in out.splitlines() if line.startswith("fail")
    ]
    assert len(failing) == 1
    assert "binet_cubic_closed_matches" in failing[0]


def test_verify_json_statuses(capsys):
    code, out, _ = run(
        capsys, "verify", "--preset", "fibonacci", "--format", "json"
    )
    checks = json.loads(out)
    assert code == 0
    assert {c["status"] for c in checks} <= {"pass", "skipped"}
    names = [c["check"] for c in checks]
    assert "symmetric_relations" in names
    assert "trapezoid_diagonal_sums" in names


# ----------------------------------------------------------------- presets


def test_presets_listing(capsys):
    code, out, _ = run(capsys, "presets")
    assert code == 0
    assert "fibonacci" in out
    assert "[builtin]" in out


def test_presets_json(capsys):
    code, out, _ = run(capsys, "presets", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert len(payload) == 4
    assert all(entry["builtin"] for entry in payload)


def test_presets_file_flows_through(capsys, tmp_path):
    path = tmp_path / "extra.conf"
    path.write_text("[quadranacci]\ncoeffs = 1, 1, 1, 1\nseeds = 0, 1, 1, 2\n")
    code, out, _ = run(
        capsys, "seq", "--preset", "quadranacci", "--presets-file", str(path),
        "--count", "8",
    )
    assert code == 0
    assert out.splitlines() == ["0", "1", "1", "2", "4", "8", "15", "29"]


# ----------------------------------------------------------------- errors


@pytest.mark.parametrize(
    "argv",
    [
        ("seq", "--coeffs", "1,x", "--seeds", "0,1"),
        ("seq", "--coeffs", "1,1"),  # missing seeds
        ("seq", "--coeffs", "1,1", "--seeds", "0,1,2"),  # length mismatch
        ("seq", "--preset", "nope"),
        ("seq", "--preset", "fibonacci", "--coeffs", "1,1"),
        ("seq", "--preset", "fibonacci", "--count", "-1"),
        ("term", "--preset", "fibonacci", "--k", "-3"),
        ("binet", "--coeffs", "0,1", "--seeds", "0,1"),  # unit root
        ("binet", "--coeffs=-1,2", "--seeds", "1,1"),  # repeated root
        ("trapezoid", "--coeffs", "1,1,1,1", "--seeds", "0,1,1,2", "--method", "closed"),
        ("verify", "--preset", "fibonacci", "--k", "0"),
        ("converge", "--coeffs", "0,0", "--seeds", "0,0"),
    ],
)
def test_domain_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_unknown_preset_lists_known_names(capsys):
    code, _, err = run(capsys, "seq", "--preset", "nope")
    assert code == 2
    assert "fibonacci" in err and "tribonacci" in err


def test_shadowing_presets_file_exits_2(capsys, tmp_path):
    path = tmp_path / "shadow.conf"
    path.write_text("[lucas]\ncoeffs = 1, 1\nseeds = 2, 1\n")
    code, _, err = run(
        capsys, "seq", "--preset", "lucas", "--presets-file", str(path)
    )
    assert code == 2
    assert "shadow" in err


def test_usage_error_exits_2(capsys):
    assert run(capsys, "seq", "--format", "yaml")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "not-a-command")[0] == 2


def test_version_flag(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert out.strip() == "goldenseq 0.1.0"


# ----------------------------------------------------------------- invariants


JSON_COMMANDS = [
    ("seq", "--preset", "fibonacci", "--format", "json"),
    ("term", "--preset", "lucas", "--k", "7", "--format", "json"),
    ("roots", "--preset", "tribonacci", "--format", "json"),
    ("binet", "--preset", "fibonacci", "--k", "12", "--format", "json"),
    ("genfunc", "--preset", "pell", "--format", "json"),
    ("trapezoid", "--preset", "pell", "--rows", "4", "--format", "json"),
    ("rowsum", "--preset", "fibonacci", "--rows", "6", "--format", "json"),
    ("converge", "--preset", "fibonacci", "--format", "json"),
    ("verify", "--preset", "fibonacci", "--format", "json"),
    ("presets", "--format", "json"),
]


@pytest.mark.parametrize("argv", JSON_COMMANDS, ids=lambda a: a[0])
def test_every_command_emits_parseable_json(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code in (0, 1)
    json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        ("roots", "--coeffs", "1,1,1", "--format", "json"),
        ("verify", "--preset", "tribonacci", "--format", "json"),
        ("seq", "--preset", "pell", "--count", "20"),
    ],
    ids=("roots", "verify", "seq"),
)
def test_repeat_runs_are_byte_identical(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
