import io
import json

import pytest

from wireid.cli import EXIT_INFEASIBLE, EXIT_INVALID, EXIT_OK, EXIT_USAGE, main
from wireid.cable import transcript_from_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ── bounds ───────────────────────────────────────────────────────────────

def test_bounds_table(capsys):
    code, out, _ = run(capsys, "bounds", "--max-m", "4")
    assert code == EXIT_OK
    assert out.splitlines() == ["1 1 1", "2 3 4", "3 6 8", "4 10 15"]


def test_bounds_single_row(capsys):
    code, out, _ = run(capsys, "bounds", "--max-m", "1")
    assert code == EXIT_OK
    assert out.splitlines() == ["1 1 1"]


def test_bounds_includes_order_six(capsys):
    code, out, _ = run(capsys, "bounds", "--max-m", "6")
    assert code == EXIT_OK
    assert "6 21 33" in out.splitlines()


def test_bounds_structured(capsys):
    code, out, _ = run(capsys, "bounds", "--max-m", "2", "--format", "structured")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["schema"] == "kg-bounds/1"
    assert payload["rows"][1] == {"m": 2, "min_n": 3, "max_n": 4}


def test_bounds_rejects_nonpositive(capsys):
    code, _, err = run(capsys, "bounds", "--max-m", "0")
    assert code == EXIT_USAGE
    assert "max-m" in err


# ── construct ────────────────────────────────────────────────────────────

def test_construct_worked_example(capsys):
    code, out, _ = run(capsys, "construct", "--n", "26")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "n=26 m=6"
    assert lines[1] == "t=6,2,3,4,5,6"
    assert lines[2] == "s=1 k=6"
    grid = lines[lines.index("matrix:") + 1 :][:6]
    assert len(grid) == 6 and all(len(row) == 6 for row in grid)
    assert any(line.startswith("a_sets:") for line in lines)
    assert any(line.startswith("b_sets:") for line in lines)


def test_construct_trivial(capsys):
    code, out, _ = run(capsys, "construct", "--n", "1")
    assert code == EXIT_OK
    assert "a_sets: {1}" in out


def test_construct_infeasible_n(capsys):
    code, _, err = run(capsys, "construct", "--n", "5")
    assert code == EXIT_INFEASIBLE
    assert "no order exists for n" in err


def test_construct_out_of_range_for_order(capsys):
    code, _, err = run(capsys, "construct", "--n", "40", "--m", "4")
    assert code == EXIT_INFEASIBLE
    assert "n out of range for order m" in err


def test_construct_structured_output(capsys):
    code, out, _ = run(capsys, "construct", "--n", "26", "--format", "structured")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["schema"] == "kg-construction/1"
    assert payload["t"] == [6, 2, 3, 4, 5, 6]
    assert len(payload["matrix"]) == 6
    assert sum(len(s) for s in payload["a_sets"]) == 26


# ── verify ───────────────────────────────────────────────────────────────

def test_construct_verify_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "--n", "26", "--format", "structured")
    assert code == EXIT_OK
    doc = tmp_path / "pair.json"
    doc.write_text(out)
    code, out, _ = run(capsys, "verify", str(doc))
    assert code == EXIT_OK
    assert "valid" in out


def test_verify_reads_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "construct", "--n", "12", "--format", "structured")
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "verify", "-")
    assert code == EXIT_OK


def test_verify_flags_violations(tmp_path, capsys):
    doc = tmp_path / "bad.json"
    doc.write_text(json.dumps({
        "schema": "kg-partition/1",
        "n": 2,
        "a_sets": [[1], [2]],
        "b_sets": [[1], [2]],
    }))
    code, _, err = run(capsys, "verify", str(doc))
    assert code == EXIT_INVALID
    assert "cell (1,1)" in err


def test_verify_parse_error(tmp_path, capsys):
    doc = tmp_path / "junk.json"
    doc.write_text("{ this is not json")
    code, _, err = run(capsys, "verify", str(doc))
    assert code == EXIT_USAGE
    assert "error" in err


def test_verify_wrong_schema(tmp_path, capsys):
    doc = tmp_path / "other.json"
    doc.write_text('{"schema": "unknown/1", "n": 1, "a_sets": [[1]], "b_sets": [[1]]}')
    code, _, err = run(capsys, "verify", str(doc))
    assert code == EXIT_USAGE


def test_verify_missing_file(capsys):
    code, _, err = run(capsys, "verify", "/no/such/file.json")
    assert code == EXIT_USAGE
    assert "cannot read" in err


# ── simulate ─────────────────────────────────────────────────────────────

def test_simulate_worked_size(capsys):
    code, out, _ = run(capsys, "simulate", "--n", "26", "--seed", "42")
    assert code == EXIT_OK
    assert out.startswith("n=26 m=6 seed=42")
    assert "coords_a:" in out and "coords_b:" in out


def test_simulate_structured(capsys):
    code, out, _ = run(capsys, "simulate", "--n", "8", "--seed", "3", "--format", "structured")
    assert code == EXIT_OK
    transcript = transcript_from_json(out)
    assert len(transcript.phase1_probe) == 8


def test_simulate_trivial(capsys):
    code, out, _ = run(capsys, "simulate", "--n", "1", "--seed", "0")
    assert code == EXIT_OK
    assert "coords_a: (1,1)" in out


def test_simulate_infeasible(capsys):
    code, _, err = run(capsys, "simulate", "--n", "9")
    assert code == EXIT_INFEASIBLE
    assert "no order exists for n" in err


# ── usage errors ─────────────────────────────────────────────────────────

@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["construct"],                      # missing --n
    ["construct", "--n", "ten"],
    ["construct", "--n", "26", "--frobnicate"],
    ["bounds"],
])
def test_usage_errors_exit_3(argv, capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["construct", "--n", "0"],
    ["construct", "--n", "10", "--m", "0"],
    ["simulate", "--n", "-3"],
])
def test_nonpositive_sizes_exit_3(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert "positive" in err
