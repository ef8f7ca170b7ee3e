import json
import subprocess
import sys

import pytest

from orbifano.cli import RENDERERS, main

BASKET = "1/2,2/5,1/3,2/11"

COMMANDS = [
    ["rr", "--volume", "1/330", "--basket", BASKET, "--m", "66"],
    ["rr", "--volume", "1/330", "--basket", BASKET, "--upto", "6"],
    ["hilbert", "--weights", "1,5,6,22,33", "--degree", "66", "--truncate", "10"],
    ["basket", "--weights", "1,5,6,22,33", "--degree", "66"],
    ["count", "--weights", "1,5,6,22,33", "--degree", "66"],
    ["verify"],
    ["search", "--volume", "1/330"],
]


def run(capsys, argv):
    status = main(argv)
    out, err = capsys.readouterr()
    return status, out, err


def test_rr_single(capsys):
    assert run(capsys, COMMANDS[0]) == (0, "172\n", "")


def test_rr_default_m_is_one(capsys):
    status, out, _ = run(capsys, ["rr", "--volume", "1/330", "--basket", BASKET])
    assert (status, out) == (0, "1\n")


def test_rr_sequence(capsys):
    status, out, _ = run(capsys, COMMANDS[1])
    assert status == 0
    assert [line.split("\t")[1] for line in out.splitlines()] == ["1", "1", "1", "1", "1", "2", "3"]


def test_rr_inconsistent_exits_1(capsys):
    status, out, err = run(capsys, ["rr", "--volume", "1/330", "--basket", "1/2,2/5"])
    assert status == 1 and out == ""
    assert "NotAnInteger" in err and "71/33" in err


def test_count(capsys):
    assert run(capsys, COMMANDS[4])[:2] == (0, "173\n")


def test_basket(capsys):
    status, out, _ = run(capsys, COMMANDS[3])
    assert status == 0
    lines = dict(line.split("\t", 1) for line in out.splitlines() if not line.startswith(("vertex", "edge")))
    assert lines["basket"] == "1/2,1/3,2/5,2/11"
    assert lines["volume"] == "1/330"


def test_basket_requires_five_weights(capsys):
    status, _, err = run(capsys, ["basket", "--weights", "1,5,6,22", "--degree", "66"])
    assert status == 2 and "--weights" in err


def test_hilbert_env_override(capsys, monkeypatch):
    monkeypatch.setenv("ORBIFANO_TRUNCATE", "6")
    status, out, _ = run(capsys, ["hilbert", "--weights", "1,5,6,22,33", "--degree", "66"])
    assert status == 0
    assert [line.split("\t")[1] for line in out.splitlines()] == ["1", "1", "1", "1", "1", "2", "3"]
    monkeypatch.setenv("ORBIFANO_TRUNCATE", "lots")
    status, _, err = run(capsys, ["hilbert", "--weights", "1,5,6,22,33", "--degree", "66"])
    assert status == 2 and "ORBIFANO_TRUNCATE" in err


def test_hilbert_default_order(capsys):
    status, out, _ = run(capsys, ["hilbert", "--weights", "1,5,6,22,33", "--degree", "66", "--json"])
    data = json.loads(out)
    assert data["order"] == 100 and len(data["coefficients"]) == 101
    assert data["coefficients"][66] == 172


def test_verify_shipped(capsys):
    status, out, _ = run(capsys, ["verify"])
    assert status == 0
    assert out.splitlines()[-1] == "result\tPASS"


def test_verify_missing_catalog(capsys):
    status, _, err = run(capsys, ["verify", "--catalog", "does_not_exist"])
    assert status == 2 and "IoFailure" in err


def test_verify_failing_entry(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps([{"name": "bad", "weights": [2, 4, 6, 10, 15], "degree": 36}]))
    status, out, _ = run(capsys, ["verify", "--catalog", str(path)])
    assert status == 1
    assert "FAILED\twell_formed" in out


def test_verify_duplicate_is_usage_error(capsys, tmp_path):
    entry = {"name": "a", "weights": [1, 1, 1, 1, 1], "degree": 4}
    path = tmp_path / "c.json"
    path.write_text(json.dumps([entry, entry]))
    assert run(capsys, ["verify", "--catalog", str(path)])[0] == 2


def test_search(capsys):
    status, out, _ = run(capsys, ["search", "--volume", "1/330"])
    assert status == 0
    assert "basket\t1/2,1/3,2/5,2/11\th0(-K)\t1\tgamma\t6559/330" in out
    assert "gamma_bound\t24/1" in out and "depth\t20" in out
    assert out.splitlines()[-1] == "unique\tyes"


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["rr", "--volume", "0.003", "--basket", BASKET], "--volume"),
        (["rr", "--volume", "1/330", "--basket", "1/2,7/x"], "--basket"),
        (["rr", "--volume", "1/330", "--basket", BASKET, "--m", "1", "--upto", "3"], "--upto"),
        (["count", "--weights", "1,a", "--degree", "3"], "--weights"),
        (["search", "--volume", "1/330", "--gamma-bound", "-1"], "--gamma-bound"),
        (["frobnicate"], "frobnicate"),
    ],
)
def test_usage_errors(capsys, argv, flag):
    status, _, err = run(capsys, argv)
    assert status == 2
    assert flag in err


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a[:2]))
def test_json_matches_human(capsys, argv):
    _, human, _ = run(capsys, argv)
    _, raw, _ = run(capsys, argv + ["--json"])
    payload = json.loads(raw)
    assert "\n".join(RENDERERS[argv[0]](payload)) + "\n" == human


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orbifano", "count", "--weights", "1,5,6,22,33", "--degree", "66"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "173\n"
