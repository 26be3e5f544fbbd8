"""CLI contract: JSON on stdout, diagnostics on stderr, exit codes, determinism."""

import json

import pytest

from tamaripop.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enum_lists_lattice(capsys):
    code, out, _ = run(capsys, "enum", "--n", "3")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 5
    assert all(rec["nu"] == "ENENE" for rec in lines)
    assert {rec["path"] for rec in lines} == {"NNEEE", "NENEE", "NEENE", "ENNEE", "ENENE"}
    vec = next(rec["vector"] for rec in lines if rec["path"] == "NNEEE")
    assert vec == [2, 0, 2, 1, 2, 2]


def test_enum_explicit_base_path(capsys):
    code, out, _ = run(capsys, "enum", "--nu", "NENE")
    assert code == 0
    assert [json.loads(line)["path"] for line in out.splitlines()] == ["NNEE", "NENE"]


def test_enum_bound_exit_code(capsys):
    code, out, err = run(capsys, "enum", "--n", "20")
    assert code == 2
    assert out == ""
    assert "bound" in err


def test_pop_vector_trajectory(capsys):
    code, out, _ = run(capsys, "pop", "--n", "3", "--vector", "2,0,1,1,2,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["sortability_time"] == 2
    assert doc["trajectory"] == [
        [2, 0, 1, 1, 2, 2],
        [1, 0, 1, 1, 2, 2],
        [0, 0, 1, 1, 2, 2],
    ]


def test_pop_trace_goes_to_stderr(capsys):
    _, out, err = run(capsys, "pop", "--n", "3", "--vector", "2,0,2,1,2,2", "--trace")
    assert "state:" in err
    assert "state:" not in out


def test_pop_invalid_vector(capsys):
    code, _, err = run(capsys, "pop", "--n", "3", "--vector", "1,1,1,1,1,1")
    assert code == 2
    assert "valid" in err


def test_pop_perm_mode(capsys):
    code, out, _ = run(capsys, "pop", "--perm", "231")
    assert code == 0
    assert json.loads(out) == {"perm": [2, 3, 1], "pop": [2, 1, 3]}


def test_pop_perm_rejects_312_containing(capsys):
    code, _, err = run(capsys, "pop", "--perm", "312")
    assert code == 2
    assert "312" in err


def test_sortable_agrees_with_series(capsys):
    code, out, _ = run(capsys, "sortable", "--n", "6", "--t", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "agree": True,
        "count": 70,
        "n": 6,
        "series_coefficient": "70",
        "t": 2,
    }


def test_series_output_is_decimal_strings(capsys):
    code, out, _ = run(capsys, "series", "--t", "1", "--terms", "6")
    assert code == 0
    assert json.loads(out) == ["0", "1", "2", "4", "8", "16", "32"]


def test_image_with_qpoly(capsys):
    code, out, _ = run(capsys, "image", "--n", "5", "--qpoly")
    assert code == 0
    doc = json.loads(out)
    assert doc["size"] == 9
    assert doc["motzkin"] == 9
    assert doc["qpoly"] == doc["qpoly_formula"] == {"2": 2, "3": 6, "4": 1}


def test_verify_suite_passes(capsys):
    code, out, err = run(capsys, "verify", "--suite", "decomposition", "--max-n", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert [c["name"] for c in doc["checks"]] == sorted(c["name"] for c in doc["checks"])
    assert all(c["status"] == "pass" for c in doc["checks"])
    # timing stays off stdout so reruns are byte-identical
    assert "seconds" not in out
    assert "(" in err


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "bogus")
    assert code == 2
    assert "unknown suite" in err


def test_verify_stdout_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "--suite", "petersen", "--max-n", "4", "--seed", "3")
    _, second, _ = run(capsys, "verify", "--suite", "petersen", "--max-n", "4", "--seed", "3")
    assert first == second


def test_pop_requires_arguments(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["pop"])
    assert exc.value.code == 2
