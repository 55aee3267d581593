import json
import subprocess
import sys

import pytest

MU = "1/2,1/3,2/5"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "diracdunkl", *args],
        capture_output=True,
        text=True,
    )


def test_rep_command_first_degree_flat():
    result = run_cli("rep", "--N", "1", "--mu", "0,0,0")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["lambda"] == ["1/2", "-3/2"]
    assert payload["A"] == ["3/2", "0/1"]
    assert payload["C"] == ["0/1", "1/2"]
    assert payload["V"] == ["-1/1", "0/1"]
    assert payload["muN"] == "-2/1"


def test_verify_passes_and_exit_code_zero(tmp_path):
    out = tmp_path / "report.json"
    result = run_cli("verify", "--degree", "1", "--mu", MU, "--out", str(out))
    assert result.returncode == 0, result.stderr
    payload = json.loads(out.read_text())
    assert payload["status"] == "pass"
    assert payload["failures"] == []
    sections = {s["section"] for s in payload["sections"]}
    assert sections == {
        "osp12", "symmetry", "monogenic", "closedform",
        "orthogonality", "representation", "fischer",
    }


def test_verify_output_is_byte_reproducible(tmp_path):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    for path in (first, second):
        result = run_cli("verify", "--degree", "1", "--mu", MU, "--out", str(path))
        assert result.returncode == 0
    assert first.read_bytes() == second.read_bytes()


def test_verify_seeded_sweep_is_deterministic(tmp_path):
    runs = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        result = run_cli("verify", "--degree", "0", "--seed", "7", "--out", str(out))
        assert result.returncode == 0
        runs.append(out.read_bytes())
    assert runs[0] == runs[1]
    payload = json.loads(runs[0])
    assert len(payload["mu_samples"]) == 5


def test_verify_rejects_negative_mu():
    result = run_cli("verify", "--degree", "2", "--mu", "-1,0,0")
    assert result.returncode == 2
    assert "mu must be non-negative" in result.stderr


def test_verify_rejects_malformed_mu():
    result = run_cli("verify", "--mu", "1/2,1/3")
    assert result.returncode == 2


def test_mutation_fails_with_named_counterexample():
    result = run_cli(
        "verify", "--degree", "2", "--mu", MU, "--mutate", "gamma3+1"
    )
    assert result.returncode == 1
    assert result.stderr.startswith("FAIL ")
    payload = json.loads(result.stdout)
    assert payload["status"] == "fail"
    first = payload["failures"][0]
    assert first["name"]
    assert first["counterexample"] is not None


def test_basis_command_schema():
    result = run_cli("basis", "--N", "2", "--mu", MU)
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["N"] == 2
    assert payload["mu"] == ["1/2", "1/3", "2/5"]
    assert len(payload["elements"]) == 6
    labels = [(e["k"], e["sign"]) for e in payload["elements"]]
    assert labels == [(0, "+"), (0, "-"), (1, "+"), (1, "-"), (2, "+"), (2, "-")]
    entry = payload["elements"][0]["poly"]
    assert set(entry) == {"up", "down"}
    for term in entry["up"]:
        assert set(term) == {"exp", "coef"}
        assert set(term["coef"]) == {"re", "im"}


def test_wavefunctions_command_schema():
    for family in ("psi", "upsilon"):
        result = run_cli(
            "wavefunctions", "--N", "1", "--mu", MU, "--basis", family
        )
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        assert payload["basis"] == family
        assert len(payload["elements"]) == 4
        for element in payload["elements"]:
            assert set(element) == {"N", "k", "sign", "poly", "squared_norm"}


def test_overlaps_command_schema():
    result = run_cli("overlaps", "--N", "1", "--mu", MU)
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert len(payload["overlaps"]) == 4
    assert len(payload["overlaps"][0]) == 4
    assert len(payload["gram_psi"]) == 4
    assert len(payload["gram_upsilon"]) == 4


def test_moments_command():
    result = run_cli("moments", "--N", "1", "--mu", "1/2,1/2,1/2")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    values = {tuple(m["half_exponents"]): m["value"] for m in payload["moments"]}
    assert values[(0, 0, 0)] == "1/1"
    assert values[(1, 0, 0)] == "1/3"


def test_rejects_negative_n():
    result = run_cli("basis", "--N", "-1", "--mu", MU)
    assert result.returncode == 2


@pytest.mark.parametrize("flag", ["--degree", "-d"])
def test_degree_flag_spellings(flag):
    result = run_cli("verify", flag, "0", "--mu", "0,0,0")
    assert result.returncode == 0
