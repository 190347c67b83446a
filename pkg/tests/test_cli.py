import io
import json
import subprocess
import sys

import pytest

from novertex import cli
from novertex.identities import Caps, Report


def run(*argv: str) -> tuple[int, str]:
    config = cli.parse_config(list(argv))
    out = io.StringIO()
    return cli.run(config, out), out.getvalue()


def test_verify_main_json():
    code, text = run("verify", "--identity", "main", "--N", "1", "--D", "2", "--M", "12", "--output", "json")
    data = json.loads(text)
    assert code == 0
    assert data["identity"] == "main" and data["status"] == "exact-match"
    assert data["caps"] == {"N": 1, "D": 2, "M": 12, "s_deg": 0}
    assert data["certified_tau_window"] == 12
    assert isinstance(data["wall_ms"], float)


def test_three_way_text():
    code, text = run("verify", "--identity", "main2", "--N", "2", "--D", "1", "--M", "10", "--three-way")
    assert code == 0
    assert text.startswith("ztn_three_way: exact-match")
    assert "certified through τ^10" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--identity", "cor_main", "--N", "2", "--s-deg", "3"],
        ["verify", "--identity", "conj_no", "--s-deg", "4"],
        ["verify", "--identity", "no_classic", "--s-deg", "4"],
        ["verify", "--identity", "lemma_inf_finite", "--D", "1", "--M", "10"],
        ["verify", "--identity", "fock_lemmas", "--N", "1", "--D", "2", "--M", "8"],
        ["verify", "--identity", "vertex_symmetries", "--D", "2", "--M", "10"],
    ],
)
def test_verify_other_identities(argv):
    code, text = run(*argv)
    assert code == 0, text
    assert "exact-match" in text


def test_no_timing_is_deterministic():
    argv = ["verify", "--identity", "main", "--N", "2", "--D", "2", "--M", "10", "--output", "json", "--no-timing"]
    first, second = run(*argv)[1], run(*argv)[1]
    assert first == second
    assert json.loads(first)["wall_ms"] is None


def test_mismatch_exit_code(monkeypatch):
    def broken(identity, caps):
        witness = {"monomial": "s^1", "exponents": [1], "tau_exponent": None, "lhs": [], "rhs": []}
        return Report(identity, caps, "mismatch", witness)

    monkeypatch.setattr(cli, "corollary_check", broken)
    code, text = run("verify", "--identity", "no_classic", "--s-deg", "2", "--output", "json")
    assert code == 1
    assert json.loads(text)["witness"]["monomial"] == "s^1"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--identity", "main", "--N", "1", "--D", "2"],
        ["verify", "--identity", "main", "--N", "0", "--D", "2", "--M", "4"],
        ["verify", "--identity", "conj_no", "--s-deg", "-1"],
        ["verify", "--identity", "cor_main", "--N", "1", "--s-deg", "2", "--three-way"],
        ["table", "--identity", "fock_lemmas", "--N", "1", "--D", "1", "--M", "4"],
        ["verify", "--identity", "unknown"],
        ["verify"],
    ],
)
def test_usage_errors(argv, capsys):
    assert cli.main(argv) == 2
    assert "usage" in capsys.readouterr().err


def test_table_json_rows():
    code, text = run("table", "--identity", "conj_no", "--s-deg", "2", "--output", "json")
    rows = json.loads(text)
    assert code == 0
    assert rows[1] == {"s_power": 1, "lhs_tpoly": [[[0], "-1/1"], [[2], "1/1"]], "rhs_tpoly": [[[0], "-1/1"], [[2], "1/1"]]}


def test_table_theorem_rows():
    code, text = run("table", "--identity", "main", "--N", "1", "--D", "1", "--M", "6", "--output", "json")
    rows = json.loads(text)
    assert rows[0]["monomial"] == "1"
    assert all(r["lhs"] == r["rhs"] for r in rows)


def test_table_text():
    code, text = run("table", "--identity", "cor_main2", "--N", "2", "--s-deg", "1")
    assert code == 0
    assert text.splitlines()[0].startswith("1: lhs = (1/1)")


def test_bench():
    code, text = run("bench", "--identity", "no_classic", "--s-deg", "3", "--repeat", "2", "--output", "json")
    data = json.loads(text)
    assert code == 0 and data["repeat"] == 2 and data["min_ms"] <= data["median_ms"]


def test_seeded_sample():
    assert cli.seeded_ring_sample(7)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "novertex", "verify", "--identity", "no_classic", "--s-deg", "3", "--no-timing"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("no_classic: exact-match")
