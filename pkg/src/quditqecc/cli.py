"""Command-line entry point: ``quditqecc <command> [options]``.

Exit status is 0 when every residual is below its threshold, 1 on a
threshold violation and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import datetime
import json
import logging
import sys
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import circuit, codewords, decoder, kl, optimality, paulis
from .qudit_math import basis_state

log = logging.getLogger("quditqecc")

COMMANDS = ("encode", "verify", "circuit-check", "simulate", "optimality", "report-all")
DEFAULT_MAX_N = 5
LARGE_MAX_N = 8
OPTIMALITY_THRESHOLD = 1e-3
FIDELITY_TOL = 1e-9


@dataclass
class RunConfig:
    command: str
    n: int = 2
    k: Optional[int] = None
    seed: int = 0
    trials: int = 100
    tol: float = kl.PASS_THRESHOLD
    out: Optional[str] = None
    format: str = "json"
    timestamp: bool = True
    allow_large_n: bool = False

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        max_n = LARGE_MAX_N if self.allow_large_n else DEFAULT_MAX_N
        if not 2 <= self.n <= max_n:
            hint = "" if self.allow_large_n else " (use --allow-large-n for up to 8)"
            raise ValueError(f"--n must lie in 2..{max_n}{hint}")
        if self.trials < 1:
            raise ValueError("--trials must be >= 1")
        if self.k is not None and not 0 <= self.k < self.n:
            raise ValueError(f"--k must lie in 0..{self.n - 1}")
        if not self.tol > 0:
            raise ValueError("--tol must be positive")
        if self.format not in ("json", "text"):
            raise ValueError("--format must be json or text")


# --- individual commands ----------------------------------------------------
# each returns (records, ok); records is a list of JSON-serializable dicts


def cmd_encode(cfg: RunConfig):
    ks = [cfg.k] if cfg.k is not None else range(cfg.n)
    recs = []
    for k in ks:
        w = codewords.encode(cfg.n, k)
        recs.append({"n": cfg.n, "k": k, "amps": [[float(a.real), float(a.imag)] for a in w.amps]})
    return recs, True


def cmd_verify(cfg: RunConfig):
    book = codewords.build_codebook(cfg.n)
    errs = paulis.full_pauli_error_set(cfg.n)
    rep = kl.verification_report(book, errs, timing=cfg.timestamp)
    ok = rep["diag_residual"] < cfg.tol and rep["offdiag_residual"] < cfg.tol
    return [rep], ok


def cmd_circuit_check(cfg: RunConfig):
    circ = circuit.build_encoding_circuit(cfg.n)
    residuals = {}
    for k in range(cfg.n):
        got = circ.run(basis_state(cfg.n, (k, 0, 0, 0, 0)))
        want = codewords.encode(cfg.n, k)
        residuals[str(k)] = float(abs(np.vdot(want.amps, got.amps) - 1))
    rep = {
        "n": cfg.n,
        "gate_count": len(circ),
        "residuals": residuals,
        "unitarity_residual": circuit.circuit_unitary_check(circ, seed=cfg.seed),
        "circuit": [g.to_dict() for g in circ.gates],
    }
    ok = max(residuals.values()) < cfg.tol and rep["unitarity_residual"] < cfg.tol
    return [rep], ok


def simulate_trials(n: int, trials: int, seed: int):
    """Seeded decoder Monte-Carlo: random logical state, random register, Pauli or random unitary."""
    book = codewords.build_codebook(n)
    plan = decoder.build_recovery(book, paulis.full_pauli_error_set(n))
    child_seeds = np.random.SeedSequence(seed).generate_state(trials)
    recs = []
    for s in child_seeds:
        s = int(s)
        rng = np.random.default_rng(s)
        coeffs = decoder.random_logical_coefficients(n, rng)
        logical = book.encode_logical(coeffs)
        if rng.random() < 0.5:
            reg = int(rng.integers(1, 6))
            a, b = (int(x) for x in rng.integers(0, n, size=2))
            if (a, b) == (0, 0):
                a = 1
            err = paulis.pauli_error(n, reg, a, b)
            kind = "pauli"
        else:
            err = paulis.random_single_register_error(n, int(rng.integers(2**32)))
            kind = "unitary"
        try:
            fixed, syndrome = decoder.decode(plan, err.apply(logical))
            fid = decoder.logical_fidelity(fixed, logical)
        except decoder.UndecodableError:
            fid, syndrome = 0.0, None
        recs.append({"seed": s, "register": err.register, "error_kind": kind, "fidelity": fid, "syndrome": syndrome})
    return recs


def cmd_simulate(cfg: RunConfig):
    recs = simulate_trials(cfg.n, cfg.trials, cfg.seed)
    fids = [r["fidelity"] for r in recs]
    summary = {
        "summary": True,
        "n": cfg.n,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "min_fidelity": min(fids),
        "failures": sum(f < 1 - FIDELITY_TOL for f in fids),
    }
    return recs + [summary], summary["failures"] == 0


def cmd_optimality(cfg: RunConfig):
    rep = optimality.falsifier_sweep(cfg.n, cfg.trials, cfg.seed)
    return [rep], rep["min_joint_residual"] > OPTIMALITY_THRESHOLD


def cmd_report_all(cfg: RunConfig):
    doc = {"sections": []}
    ok = True
    for n in range(2, 6):
        sub = RunConfig(**{**cfg.__dict__, "n": n, "k": None})
        for name, fn in (
            ("verify", cmd_verify),
            ("circuit-check", cmd_circuit_check),
            ("simulate", cmd_simulate),
            ("optimality", cmd_optimality),
        ):
            if name == "optimality" and n > 3:
                continue
            recs, good = fn(sub)
            if name == "simulate":
                recs = recs[-1:]
            ok &= good
            doc["sections"].append({"command": name, "n": n, "ok": good, "records": recs})
    doc["ok"] = ok
    return [doc], ok


HANDLERS = {
    "encode": cmd_encode,
    "verify": cmd_verify,
    "circuit-check": cmd_circuit_check,
    "simulate": cmd_simulate,
    "optimality": cmd_optimality,
    "report-all": cmd_report_all,
}


# --- output -----------------------------------------------------------------


def _render_text(rec, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for key, val in rec.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(_render_text(item, indent + 1))
                lines.append("")
        elif key == "amps":
            lines.append(f"{pad}{key}: [{len(val)} amplitudes]")
        else:
            lines.append(f"{pad}{key}: {val}")
    return "\n".join(lines)


def render(records, fmt: str) -> str:
    if fmt == "text":
        return "\n\n".join(_render_text(r) for r in records) + "\n"
    if len(records) == 1:
        return json.dumps(records[0], sort_keys=True) + "\n"
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit_status, rendered_output)``."""
    cfg.validate()
    if cfg.n > DEFAULT_MAX_N:
        log.warning("n=%d: the verification sweep works with %d-dimensional vectors", cfg.n, cfg.n**5)
    t0 = time.perf_counter()
    records, ok = HANDLERS[cfg.command](cfg)
    if cfg.timestamp:
        records[-1]["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
        records[-1].setdefault("elapsed_seconds", time.perf_counter() - t0)
    text = render(records, cfg.format)
    if not ok:
        bad = [r for r in records if not _record_ok(r, cfg)]
        for r in bad[:5]:
            print("threshold violation: " + json.dumps(r, sort_keys=True)[:2000], file=sys.stderr)
    return (0 if ok else 1), text


def _record_ok(rec, cfg) -> bool:
    if "fidelity" in rec:
        return rec["fidelity"] >= 1 - FIDELITY_TOL
    if "diag_residual" in rec:
        return rec["diag_residual"] < cfg.tol and rec["offdiag_residual"] < cfg.tol
    if "min_joint_residual" in rec:
        return rec["min_joint_residual"] > OPTIMALITY_THRESHOLD
    if "ok" in rec:
        return rec["ok"]
    return True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quditqecc", description="Five-register qudit code toolkit")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--n", type=int, default=2, help="qudit dimension")
    parser.add_argument("--k", type=int, default=None, help="logical index for encode")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=100, help="Monte-Carlo trials or optimality candidates")
    parser.add_argument("--tol", type=float, default=kl.PASS_THRESHOLD, help="pass threshold for residuals")
    parser.add_argument("--out", default=None, help="write the report here instead of stdout")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--no-timestamp", action="store_true", help="omit timestamp and timing fields")
    parser.add_argument("--allow-large-n", action="store_true", help="permit n up to 8")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        n=args.n,
        k=args.k,
        seed=args.seed,
        trials=args.trials,
        tol=args.tol,
        out=args.out,
        format=args.format,
        timestamp=not args.no_timestamp,
        allow_large_n=args.allow_large_n,
    )
    try:
        cfg.validate()
    except ValueError as exc:
        parser.error(str(exc))
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    status, text = run(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
