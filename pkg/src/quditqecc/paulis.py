"""Single-register errors: generalized Pauli operators, matrix units and random unitaries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .qudit_math import CodeParams, QuditState, apply_on_register, embed_on_register, root_power


def shift_op(n: int) -> np.ndarray:
    """``X|m> = |m+1 mod n>``."""
    return np.roll(np.eye(n, dtype=np.complex128), 1, axis=0)


def clock_op(n: int) -> np.ndarray:
    """``Z|m> = omega**m |m>``."""
    return np.diag(root_power(n, np.arange(n))).astype(np.complex128)


def pauli_op(n: int, a: int, b: int) -> np.ndarray:
    """``X**a Z**b``."""
    return np.linalg.matrix_power(shift_op(n), a % n) @ np.linalg.matrix_power(clock_op(n), b % n)


def matrix_unit(n: int, i0: int, j0: int) -> np.ndarray:
    """The operator ``|i0><j0|``."""
    m = np.zeros((n, n), dtype=np.complex128)
    m[i0, j0] = 1.0
    return m


@dataclass(frozen=True, eq=False)
class RegisterError:
    """An ``n x n`` operator acting on one register (``register=None`` for the global identity).

    ``kind`` is ``"identity"``, ``"pauli"``, ``"matrix_unit"`` or ``"arbitrary"``;
    ``key`` holds ``(a, b)`` for Paulis and ``(i0, j0)`` for matrix units.
    """

    register: Optional[int]
    kind: str
    op: np.ndarray
    key: tuple = ()
    label: str = ""

    def apply(self, state: QuditState) -> QuditState:
        if self.register is None:
            return state
        return apply_on_register(self.op, self.register, state)

    def dense(self, registers: int = 5) -> np.ndarray:
        n = self.op.shape[0]
        if self.register is None:
            return np.eye(n**registers, dtype=np.complex128)
        return embed_on_register(self.op, self.register, registers)

    @property
    def ident(self) -> tuple:
        return (self.register, self.kind, self.key)


def identity_error(n: int) -> RegisterError:
    return RegisterError(None, "identity", np.eye(n, dtype=np.complex128), (), "I")


def pauli_error(n: int, register: int, a: int, b: int) -> RegisterError:
    return RegisterError(register, "pauli", pauli_op(n, a, b), (a % n, b % n), f"X^{a % n} Z^{b % n} @ reg {register}")


def matrix_unit_error(n: int, register: int, i0: int, j0: int) -> RegisterError:
    return RegisterError(register, "matrix_unit", matrix_unit(n, i0, j0), (i0, j0), f"E({i0},{j0}) @ reg {register}")


def arbitrary_error(op, register: int, label: str | None = None) -> RegisterError:
    op = np.asarray(op, dtype=np.complex128)
    return RegisterError(register, "arbitrary", op, (), label or f"U @ reg {register}")


@dataclass(frozen=True, eq=False)
class ErrorSet:
    params: CodeParams
    errors: tuple

    def __post_init__(self):
        idents = [e.ident for e in self.errors]
        if len(set(idents)) != len(idents):
            raise ValueError("duplicate errors in error set")
        if not self.errors or self.errors[0].kind != "identity":
            raise ValueError("the identity must be listed first")

    def __len__(self):
        return len(self.errors)

    def __iter__(self):
        return iter(self.errors)

    def __getitem__(self, i):
        return self.errors[i]

    @property
    def labels(self) -> list[str]:
        return [e.label for e in self.errors]


def full_pauli_error_set(params: CodeParams | int, registers: int = 5) -> ErrorSet:
    """Identity plus every nontrivial ``X**a Z**b`` on each register; size ``1 + R(n**2 - 1)``."""
    if not isinstance(params, CodeParams):
        params = CodeParams(int(params))
    n = params.n
    errors = [identity_error(n)]
    for reg in range(1, registers + 1):
        for a in range(n):
            for b in range(n):
                if (a, b) != (0, 0):
                    errors.append(pauli_error(n, reg, a, b))
    return ErrorSet(params, tuple(errors))


def matrix_unit_error_set(params: CodeParams | int, registers_acted) -> ErrorSet:
    """Identity plus all ``n**2`` matrix units on each listed register."""
    if not isinstance(params, CodeParams):
        params = CodeParams(int(params))
    n = params.n
    errors = [identity_error(n)]
    for reg in registers_acted:
        for i0 in range(n):
            for j0 in range(n):
                errors.append(matrix_unit_error(n, reg, i0, j0))
    return ErrorSet(params, tuple(errors))


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Orthonormalize a complex Gaussian matrix (QR with the diagonal phases fixed)."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_single_register_error(params: CodeParams | int, seed, registers: int = 5) -> RegisterError:
    n = params.n if isinstance(params, CodeParams) else int(params)
    rng = np.random.default_rng(seed)
    reg = int(rng.integers(1, registers + 1))
    return arbitrary_error(random_unitary(n, rng), reg, f"U[seed={seed}] @ reg {reg}")
