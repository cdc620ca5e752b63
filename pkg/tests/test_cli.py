"""CLI behavior: exit codes, determinism, golden classification tables."""

import json
import os

import pytest

from rgroups.cli import main

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")

SCEN = {
    "group": {"family": "C", "rank": 3, "form": "quasi-split"},
    "levi": {"blocks": [1, 1], "m": 1, "ddeg": 1},
    "sigma": {"classes": ["a", "a"], "dual": {"a": "a"}, "reducible": {"a": True}},
}


def write(tmp_path, doc, name="scen.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_run_json(tmp_path, capsys):
    assert main(["run", write(tmp_path, SCEN)]) == 0
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert doc["r_group"]["order"] == 2
    assert doc["closed_form"]["matches"] is True


def test_run_text(tmp_path, capsys):
    assert main(["run", write(tmp_path, SCEN), "--text"]) == 0
    out = capsys.readouterr().out
    assert "R       : order 2 = 2^1" in out
    assert "agree=True" in out


def test_run_deterministic(tmp_path, capsys):
    path = write(tmp_path, SCEN)
    main(["run", path])
    first = capsys.readouterr().out
    main(["run", path])
    second = capsys.readouterr().out
    assert first == second


def test_run_pair_autodetect(tmp_path, capsys):
    pair = {
        "quasi_split": {
            "group": {"family": "C", "rank": 3, "form": "quasi-split"},
            "levi": {"blocks": [2], "m": 1, "ddeg": 1},
            "sigma": {"classes": ["a"], "dual": {"a": "a"}, "reducible": {"a": True}},
        },
        "inner": {
            "group": {"family": "C", "rank": 3, "form": "inner"},
            "levi": {"blocks": [2], "m": 1, "ddeg": 2},
            "sigma": {"classes": ["a"], "dual": {"a": "a"}, "reducible": {"a": True}},
        },
    }
    assert main(["run", write(tmp_path, pair), "--text"]) == 0
    assert "transfer: match" in capsys.readouterr().out


def test_run_validation_exit_2(tmp_path, capsys):
    bad = json.loads(json.dumps(SCEN))
    bad["sigma"]["dual"] = {"a": "b", "b": "c", "c": "a"}
    assert main(["run", write(tmp_path, bad)]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "sigma.dual" in captured.err


def test_run_missing_file_exit_2(capsys):
    assert main(["run", "/nonexistent/x.json"]) == 2
    assert "file" in capsys.readouterr().err


def test_enumerate_levis(capsys):
    assert main(["enumerate", "B", "2"]) == 0
    out = capsys.readouterr().out
    assert "GL_2(F)" in out
    assert "GL_1(F) x SO_3" in out


def test_enumerate_forms(capsys):
    assert main(["enumerate", "D1", "4", "--forms"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 3


def test_enumerate_bad_rank(capsys):
    assert main(["enumerate", "B", "1"]) == 2
    assert main(["enumerate", "B", "99"]) == 2
    capsys.readouterr()


def test_enumerate_unknown_form(capsys):
    assert main(["enumerate", "B", "3", "--form", "inner-odd"]) == 2
    capsys.readouterr()


@pytest.mark.parametrize("family", ["B", "C", "D1", "D2"])
def test_golden_forms(family, capsys):
    chunks = []
    for rank in range(2, 7):
        assert main(["enumerate", family, str(rank), "--forms"]) == 0
        chunks.append(capsys.readouterr().out)
    with open(os.path.join(GOLDEN, f"{family}_forms.txt")) as fh:
        assert "".join(chunks) == fh.read()


@pytest.mark.parametrize("family", ["B", "C", "D1", "D2"])
def test_golden_maximal_levis(family, capsys):
    chunks = []
    for rank in range(2, 7):
        assert main(["enumerate", family, str(rank), "--maximal"]) == 0
        chunks.append(capsys.readouterr().out)
    with open(os.path.join(GOLDEN, f"{family}_maximal.txt")) as fh:
        assert "".join(chunks) == fh.read()


def test_sweep_small(tmp_path, capsys):
    report_dir = str(tmp_path / "rep")
    seed = str(tmp_path / "seed.txt")
    code = main(["sweep", "--max-rank", "3", "--max-k", "2",
                 "--report-dir", report_dir, "--seed-report", seed])
    assert code == 0
    out = capsys.readouterr().out
    assert "violations        : 0" in out
    assert sorted(os.listdir(report_dir)) == ["elliptic.png", "exponents.png", "sweep.tsv"]
    with open(seed) as fh:
        assert fh.read() == out


def test_sweep_tsv_shape(tmp_path, capsys):
    report_dir = str(tmp_path / "rep")
    main(["sweep", "--max-rank", "2", "--max-k", "2", "--report-dir", report_dir])
    capsys.readouterr()
    lines = open(os.path.join(report_dir, "sweep.tsv")).read().splitlines()
    header = lines[0].split("\t")
    assert header[:3] == ["family", "rank", "form"]
    assert all(len(line.split("\t")) == len(header) for line in lines[1:])


def test_selfcheck(capsys):
    assert main(["selfcheck"]) == 0
    assert "selfcheck ok" in capsys.readouterr().out
