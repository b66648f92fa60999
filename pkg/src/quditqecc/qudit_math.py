"""Roots of unity, character sums and dense state/operator algebra for qudits.

Basis ordering is big-endian throughout: register 1 is the most significant
digit of the flat amplitude index, so ``|d1, d2, ..., dR>`` lives at index
``d1 * n**(R-1) + ... + dR``.  Register indices in the public API are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

STATE_TOL = 1e-10
LAMBDA_TOL = 1e-9

# largest dimension for which a full register-embedded matrix is materialized
MAX_DENSE_DIM = 4**5


class InvalidDimensionError(ValueError):
    """Raised for a qudit dimension below 2."""


class DimensionMismatchError(ValueError):
    """Raised when states or operators live on incompatible spaces."""


def _check_dimension(n: int) -> None:
    if int(n) != n or n < 2:
        raise InvalidDimensionError(f"qudit dimension must be an integer >= 2, got {n!r}")


def primitive_root(n: int) -> complex:
    """Return ``exp(2 pi i / n)``."""
    _check_dimension(n)
    return complex(np.exp(2j * np.pi / n))


def root_power(n: int, exponent) -> np.ndarray | complex:
    """``omega_n ** exponent`` with the exponent reduced mod ``n`` first.

    Reducing before exponentiating keeps large integer exponents exact.
    """
    _check_dimension(n)
    e = np.mod(exponent, n)
    return np.exp(2j * np.pi * e / n)


def character_sum(n: int, k: int) -> complex:
    """Sum of ``omega_n ** (m k)`` over ``m = 0..n-1``.

    Equals ``n`` when ``k = 0 mod n`` and zero otherwise.
    """
    _check_dimension(n)
    m = np.arange(n)
    return complex(np.sum(root_power(n, m * k)))


@dataclass(frozen=True)
class CodeParams:
    """Qudit dimension together with its root of unity and a comparison tolerance."""

    n: int
    tol: float = STATE_TOL
    omega: complex = field(init=False)

    def __post_init__(self):
        _check_dimension(self.n)
        if not 0 < self.tol < 1e-6:
            raise ValueError(f"tol must lie in (0, 1e-6), got {self.tol}")
        object.__setattr__(self, "omega", primitive_root(self.n))

    def is_primitive(self) -> bool:
        powers = [self.omega**m for m in range(1, self.n)]
        closes = abs(self.omega**self.n - 1) < self.tol
        return closes and all(abs(w - 1) > self.tol for w in powers)


@dataclass(frozen=True, eq=False)
class QuditState:
    """Amplitude vector over ``n ** registers`` basis kets (big-endian)."""

    n: int
    registers: int
    amps: np.ndarray

    def __post_init__(self):
        _check_dimension(self.n)
        amps = np.asarray(self.amps, dtype=np.complex128).reshape(-1)
        if amps.size != self.n**self.registers:
            raise DimensionMismatchError(
                f"expected {self.n ** self.registers} amplitudes, got {amps.size}"
            )
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @property
    def dim(self) -> int:
        return self.amps.size

    @property
    def tensor(self) -> np.ndarray:
        """Read-only view with one axis per register."""
        return self.amps.reshape((self.n,) * self.registers)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def normalized(self) -> QuditState:
        nrm = self.norm()
        if nrm == 0:
            raise ValueError("cannot normalize the zero vector")
        return QuditState(self.n, self.registers, self.amps / nrm)

    def is_normalized(self, tol: float = STATE_TOL) -> bool:
        return abs(self.norm() ** 2 - 1) < tol

    def __add__(self, other: QuditState) -> QuditState:
        _check_same_space(self, other)
        return QuditState(self.n, self.registers, self.amps + other.amps)

    def __mul__(self, c: complex) -> QuditState:
        return QuditState(self.n, self.registers, c * self.amps)

    __rmul__ = __mul__

    def __repr__(self):
        return f"QuditState(n={self.n}, registers={self.registers}, nnz={np.count_nonzero(self.amps)})"


def _check_same_space(a: QuditState, b: QuditState) -> None:
    if (a.n, a.registers) != (b.n, b.registers):
        raise DimensionMismatchError(
            f"states on different spaces: (n={a.n}, R={a.registers}) vs (n={b.n}, R={b.registers})"
        )


def basis_state(n: int, digits) -> QuditState:
    """The computational basis ket ``|digits>``; digits are taken mod ``n``."""
    digits = [int(d) % n for d in digits]
    amps = np.zeros(n ** len(digits), dtype=np.complex128)
    amps[basis_index(n, digits)] = 1.0
    return QuditState(n, len(digits), amps)


def basis_index(n: int, digits) -> int:
    idx = 0
    for d in digits:
        idx = idx * n + int(d) % n
    return idx


@lru_cache(maxsize=None)
def basis_digits(n: int, registers: int) -> np.ndarray:
    """Integer array of shape ``(registers, n**registers)``; column j holds the digits of ket j."""
    d = np.indices((n,) * registers).reshape(registers, -1)
    d.flags.writeable = False
    return d


def inner_product(a: QuditState, b: QuditState) -> complex:
    """``<a|b>``, conjugate-linear in ``a``."""
    _check_same_space(a, b)
    return complex(np.vdot(a.amps, b.amps))


def _check_register(i: int, registers: int) -> None:
    if not 1 <= i <= registers:
        raise IndexError(f"register index {i} outside 1..{registers}")


def _check_local_op(op: np.ndarray, n: int) -> np.ndarray:
    op = np.asarray(op, dtype=np.complex128)
    if op.shape != (n, n):
        raise DimensionMismatchError(f"expected a {n}x{n} operator, got shape {op.shape}")
    if not np.all(np.isfinite(op)):
        raise ValueError("operator has non-finite entries")
    return op


def apply_on_register(op: np.ndarray, i: int, state: QuditState) -> QuditState:
    """Apply a one-register operator to register ``i`` without building the full matrix."""
    _check_register(i, state.registers)
    op = _check_local_op(op, state.n)
    t = np.tensordot(op, state.tensor, axes=([1], [i - 1]))
    t = np.moveaxis(t, 0, i - 1)
    return QuditState(state.n, state.registers, t)


def embed_on_register(op: np.ndarray, i: int, registers: int = 5, *, force: bool = False) -> np.ndarray:
    """Dense ``I x ... x op x ... x I`` with ``op`` in slot ``i`` (1-based, big-endian).

    Refuses to materialize matrices larger than ``4**5`` square unless ``force``
    is set; use :func:`apply_on_register` for those.
    """
    op = np.asarray(op, dtype=np.complex128)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise DimensionMismatchError(f"operator must be square, got shape {op.shape}")
    n = op.shape[0]
    _check_dimension(n)
    _check_register(i, registers)
    _check_local_op(op, n)
    if n**registers > MAX_DENSE_DIM and not force:
        raise MemoryError(
            f"refusing to build a {n ** registers}-dimensional dense operator; "
            "apply it slot-wise or pass force=True"
        )
    left = np.eye(n ** (i - 1), dtype=np.complex128)
    right = np.eye(n ** (registers - i), dtype=np.complex128)
    return np.kron(np.kron(left, op), right)


def partial_trace(state: QuditState, keep) -> np.ndarray:
    """Reduced density matrix ``Tr_rest |psi><psi|`` on the 1-based registers ``keep``.

    Rows and columns are indexed big-endian over the kept registers in the
    order given.
    """
    keep = [int(i) for i in keep]
    for i in keep:
        _check_register(i, state.registers)
    rest = [i for i in range(1, state.registers + 1) if i not in keep]
    t = np.transpose(state.tensor, [i - 1 for i in keep + rest])
    m = t.reshape(state.n ** len(keep), -1)
    return m @ m.conj().T
