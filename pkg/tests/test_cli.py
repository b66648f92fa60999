import json

import numpy as np
import pytest

from conftest import N2_WORD_0, amplitudes_from_terms
from quditqecc.cli import RunConfig, main, run


def _json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_encode_qubit_word(capsys):
    assert main(["encode", "--n", "2", "--k", "0", "--no-timestamp"]) == 0
    doc = json.loads(capsys.readouterr().out)
    amps = np.array([complex(re, im) for re, im in doc["amps"]])
    assert doc["n"] == 2 and doc["k"] == 0
    assert np.abs(amps - amplitudes_from_terms(N2_WORD_0)).max() < 1e-12


def test_encode_all_words():
    status, text = run(RunConfig("encode", n=3, timestamp=False))
    assert status == 0
    assert [d["k"] for d in _json_lines(text)] == [0, 1, 2]


def test_verify_qubits():
    status, text = run(RunConfig("verify", n=2))
    rep = json.loads(text)
    assert status == 0
    assert rep["diag_residual"] < 1e-9 and rep["offdiag_residual"] < 1e-9
    assert rep["error_count"] == 16
    assert "elapsed_seconds" in rep and "timestamp" in rep


def test_verify_threshold_violation_exit_code(capsys):
    # an impossible tolerance turns the pass into a violation
    assert main(["verify", "--n", "2", "--tol", "1e-30"]) == 1
    assert "threshold violation" in capsys.readouterr().err


def test_circuit_check():
    status, text = run(RunConfig("circuit-check", n=3, timestamp=False))
    rep = json.loads(text)
    assert status == 0
    assert rep["gate_count"] == 12 and len(rep["circuit"]) == 12
    assert max(rep["residuals"].values()) < 1e-9
    assert rep["circuit"][3] == {"gate": "qudit_dft", "args": [3]}


def test_simulate_records():
    status, text = run(RunConfig("simulate", n=3, trials=100, seed=7))
    recs = _json_lines(text)
    assert status == 0
    trials, summary = recs[:-1], recs[-1]
    assert len(trials) == 100
    assert all(r["fidelity"] >= 1 - 1e-9 for r in trials)
    assert set(trials[0]) == {"seed", "register", "error_kind", "fidelity", "syndrome"}
    assert {r["error_kind"] for r in trials} == {"pauli", "unitary"}
    assert summary["summary"] and summary["failures"] == 0


def test_optimality_report():
    status, text = run(RunConfig("optimality", n=2, trials=20, timestamp=False))
    rep = json.loads(text)
    assert status == 0
    assert set(rep) >= {"n", "candidates", "min_joint_residual", "argmin_seed"}


@pytest.mark.parametrize("cmd", ["encode", "verify", "circuit-check", "simulate", "optimality"])
def test_deterministic_output(cmd):
    cfg = RunConfig(cmd, n=2, trials=5, seed=3, timestamp=False)
    assert run(cfg)[1] == run(cfg)[1]


def test_text_format():
    status, text = run(RunConfig("verify", n=2, format="text", timestamp=False))
    assert "diag_residual:" in text and "worst_pair:" in text


def test_out_file(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--n", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["n"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--n", "6"],
        ["verify", "--n", "1"],
        ["simulate", "--trials", "0"],
        ["encode", "--n", "3", "--k", "3"],
        ["frobnicate"],
        ["verify", "--format", "xml"],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_large_n_needs_flag():
    cfg = RunConfig("encode", n=6, k=0, allow_large_n=True, timestamp=False)
    status, text = run(cfg)
    assert status == 0 and json.loads(text)["n"] == 6
