"""Gate-level encoder for the five-register code.

Gate kinds (registers are 1-based):

``gen_cnot(control, target, sign)``
    ``|c>|t> -> |c>|t + sign*c mod n>``
``qudit_dft(target)``
    ``|m> -> n^{-1/2} sum_j omega^{+mj} |j>``
``ctrl_phase(a, b)``
    ``|x>_a |y>_b -> omega^{xy} |x>_a |y>_b``
``local_perm(target, perm)``
    ``|m> -> |perm[m]>``
``local_op(target, matrix)``
    arbitrary ``n x n`` matrix on one register; not checked for unitarity
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .codewords import REGISTERS
from .qudit_math import CodeParams, QuditState, apply_on_register, basis_digits, basis_state, root_power

GATE_KINDS = ("gen_cnot", "qudit_dft", "ctrl_phase", "local_perm", "local_op")


@dataclass(frozen=True)
class Gate:
    kind: str
    args: tuple

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")

    def registers(self) -> tuple:
        if self.kind in ("gen_cnot", "ctrl_phase"):
            return tuple(self.args[:2])
        return (self.args[0],)

    def to_dict(self) -> dict:
        args = []
        for a in self.args:
            if isinstance(a, np.ndarray):
                args.append([[[float(z.real), float(z.imag)] for z in row] for row in a])
            elif isinstance(a, tuple):
                args.append(list(a))
            else:
                args.append(a)
        return {"gate": self.kind, "args": args}

    @classmethod
    def from_dict(cls, d: dict) -> Gate:
        kind, args = d["gate"], list(d["args"])
        if kind == "local_op":
            args[1] = np.array([[complex(re, im) for re, im in row] for row in args[1]])
        elif kind == "local_perm":
            args[1] = tuple(args[1])
        return cls(kind, tuple(args))


def gen_cnot(control: int, target: int, sign: int = 1) -> Gate:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if control == target:
        raise ValueError("control and target must differ")
    return Gate("gen_cnot", (control, target, sign))


def qudit_dft(target: int) -> Gate:
    return Gate("qudit_dft", (target,))


def ctrl_phase(reg_a: int, reg_b: int) -> Gate:
    if reg_a == reg_b:
        raise ValueError("ctrl_phase needs two distinct registers")
    return Gate("ctrl_phase", (reg_a, reg_b))


def local_perm(target: int, perm) -> Gate:
    return Gate("local_perm", (target, tuple(int(x) for x in perm)))


def local_op(target: int, matrix) -> Gate:
    return Gate("local_op", (target, np.asarray(matrix, dtype=np.complex128)))


def dft_matrix(n: int) -> np.ndarray:
    m, j = np.meshgrid(np.arange(n), np.arange(n))
    return root_power(n, m * j) / np.sqrt(n)


def _permute_amplitudes(state: QuditState, new_digits: np.ndarray) -> QuditState:
    """Send the amplitude of ket j to the ket with digits ``new_digits[:, j]``."""
    idx = np.ravel_multi_index(tuple(new_digits), (state.n,) * state.registers)
    out = np.zeros_like(state.amps)
    out[idx] = state.amps
    return QuditState(state.n, state.registers, out)


def apply_gate(g: Gate, s: QuditState) -> QuditState:
    for reg in g.registers():
        if not 1 <= reg <= s.registers:
            raise IndexError(f"register {reg} outside 1..{s.registers}")
    n = s.n
    if g.kind == "gen_cnot":
        c, t, sign = g.args
        digits = np.array(basis_digits(n, s.registers))
        digits[t - 1] = (digits[t - 1] + sign * digits[c - 1]) % n
        return _permute_amplitudes(s, digits)
    if g.kind == "qudit_dft":
        return apply_on_register(dft_matrix(n), g.args[0], s)
    if g.kind == "ctrl_phase":
        a, b = g.args
        digits = basis_digits(n, s.registers)
        return QuditState(n, s.registers, s.amps * root_power(n, digits[a - 1] * digits[b - 1]))
    if g.kind == "local_perm":
        t, perm = g.args
        if sorted(perm) != list(range(n)):
            raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
        digits = np.array(basis_digits(n, s.registers))
        digits[t - 1] = np.asarray(perm)[digits[t - 1]]
        return _permute_amplitudes(s, digits)
    return apply_on_register(g.args[1], g.args[0], s)


@dataclass(frozen=True)
class Circuit:
    params: CodeParams
    gates: tuple = field(default_factory=tuple)
    registers: int = REGISTERS

    def __len__(self):
        return len(self.gates)

    def run(self, state: QuditState) -> QuditState:
        if state.n != self.params.n or state.registers != self.registers:
            raise ValueError("state does not match the circuit's register space")
        for g in self.gates:
            state = apply_gate(g, state)
        return state

    def to_json(self) -> str:
        return json.dumps({"n": self.params.n, "registers": self.registers, "gates": [g.to_dict() for g in self.gates]})

    @classmethod
    def from_json(cls, text: str) -> Circuit:
        d = json.loads(text)
        gates = tuple(Gate.from_dict(g) for g in d["gates"])
        return cls(CodeParams(int(d["n"])), gates, int(d.get("registers", REGISTERS)))


def build_encoding_circuit(params: CodeParams | int) -> Circuit:
    """Twelve-gate encoder taking ``|k,0,0,0,0>`` to the codeword of ``|k>``.

    Stage by stage (sums over p, q, r and normalization implied)::

        |k,0,0,0,0>
        -> |k,0,k,k,k>                         copy reg 1 into 3, 4, 5
        -> w^{k(p+q+r)} |k,0,r,p,q>            DFT on 3, 4, 5
        -> w^{k(p+q+r)+pr} |k,0,r,p,q>         phase between 4 (p) and 3 (r)
        -> ... |k,p,r,p,q>                     copy reg 4 into 2
        -> ... |k,p+r,q+r,p,q>                 reg 2 += reg 3, then reg 3 += reg 5
        -> ... |p+q+k,p+r,q+r,p,q>             reg 1 += reg 4, reg 1 += reg 5

    Register 2 must pick up ``r`` before register 3 is overwritten with ``q+r``.
    """
    if not isinstance(params, CodeParams):
        params = CodeParams(int(params))
    gates = (
        gen_cnot(1, 3),
        gen_cnot(1, 4),
        gen_cnot(1, 5),
        qudit_dft(3),
        qudit_dft(4),
        qudit_dft(5),
        ctrl_phase(4, 3),
        gen_cnot(4, 2),
        gen_cnot(3, 2),
        gen_cnot(5, 3),
        gen_cnot(4, 1),
        gen_cnot(5, 1),
    )
    return Circuit(params, gates)


ENCODING_GATE_COUNT = 12


def encode_with_circuit(params: CodeParams | int, k: int) -> QuditState:
    circ = build_encoding_circuit(params)
    return circ.run(basis_state(circ.params.n, (k, 0, 0, 0, 0)))


def circuit_unitary_check(c: Circuit, samples: int | None = None, seed: int = 0) -> float:
    """Max deviation of the column Gram matrix from identity.

    For ``n**registers <= 1024`` every column is checked, otherwise ``samples``
    (default 64) randomly chosen basis columns.
    """
    n, R = c.params.n, c.registers
    dim = n**R
    if dim <= 4**5 and samples is None:
        cols = np.arange(dim)
    else:
        rng = np.random.default_rng(seed)
        cols = rng.choice(dim, size=min(samples or 64, dim), replace=False)
    digits = basis_digits(n, R)
    images = np.stack([c.run(basis_state(n, digits[:, j])).amps for j in cols])
    gram = images.conj() @ images.T
    return float(np.abs(gram - np.eye(len(cols))).max())
