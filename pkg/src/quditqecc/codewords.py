"""The five-register code: codewords, codebook and the qubit-case register relabelling."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .qudit_math import CodeParams, QuditState, basis_digits, inner_product, root_power

REGISTERS = 5


class EncodingTerm(NamedTuple):
    """One ``(p, q, r)`` summand of a codeword."""

    p: int
    q: int
    r: int
    phase_exponent: int
    ket_digits: tuple


def encoding_terms(n: int, k: int) -> list[EncodingTerm]:
    """All ``n**3`` summands of logical ``|k>``: phase ``omega**e`` on ket ``|p+q+k, p+r, q+r, p, q>``."""
    _check_logical(n, k)
    terms = []
    for p, q, r in itertools.product(range(n), repeat=3):
        e = (k * (p + q + r) + p * r) % n
        digits = ((p + q + k) % n, (p + r) % n, (q + r) % n, p, q)
        terms.append(EncodingTerm(p, q, r, e, digits))
    return terms


def decode_digits(n: int, digits) -> tuple[int, int, int, int]:
    """Recover ``(p, q, r, k)`` from the digits of a codeword ket."""
    d1, d2, _, p, q = (int(d) % n for d in digits)
    r = (d2 - p) % n
    k = (d1 - p - q) % n
    return p, q, r, k


def _check_logical(n: int, k: int) -> None:
    if not 0 <= k < n:
        raise ValueError(f"logical index {k} outside 0..{n - 1}")


def encode(params: CodeParams | int, k: int) -> QuditState:
    """Codeword for logical ``|k>``.

    Vectorized over ``(p, q, r)``; every ket appears exactly once so the
    scatter needs no accumulation.
    """
    n = params.n if isinstance(params, CodeParams) else int(params)
    _check_logical(n, k)
    p, q, r = np.indices((n, n, n)).reshape(3, -1)
    phase = root_power(n, k * (p + q + r) + p * r)
    idx = np.ravel_multi_index(((p + q + k) % n, (p + r) % n, (q + r) % n, p, q), (n,) * REGISTERS)
    amps = np.zeros(n**REGISTERS, dtype=np.complex128)
    amps[idx] = phase / n**1.5
    return QuditState(n, REGISTERS, amps)


@dataclass(frozen=True, eq=False)
class Codebook:
    """The ``n`` codewords of a code, in logical order."""

    params: CodeParams
    words: tuple

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def registers(self) -> int:
        return self.words[0].registers

    def matrix(self) -> np.ndarray:
        """Codewords as rows, shape ``(n, dim)``."""
        return np.stack([w.amps for w in self.words])

    def gram(self) -> np.ndarray:
        m = self.matrix()
        return m.conj() @ m.T

    def encode_logical(self, coeffs) -> QuditState:
        """Encoded image of ``sum_k coeffs[k] |k>``."""
        coeffs = np.asarray(coeffs, dtype=np.complex128)
        if coeffs.shape != (self.n,):
            raise ValueError(f"expected {self.n} logical coefficients")
        w = self.words[0]
        return QuditState(w.n, w.registers, coeffs @ self.matrix())

    def logical_coefficients(self, state: QuditState) -> np.ndarray:
        return np.array([inner_product(w, state) for w in self.words])


@lru_cache(maxsize=16)
def _cached_codebook(n: int, tol: float) -> Codebook:
    params = CodeParams(n, tol)
    return Codebook(params, tuple(encode(params, k) for k in range(n)))


def build_codebook(params: CodeParams | int) -> Codebook:
    if not isinstance(params, CodeParams):
        params = CodeParams(int(params))
    return _cached_codebook(params.n, params.tol)


def codeword_to_json(state: QuditState, k: int) -> str:
    amps = [[float(a.real), float(a.imag)] for a in state.amps]
    return json.dumps({"n": state.n, "k": k, "amps": amps})


def codeword_from_json(text: str) -> tuple[QuditState, int]:
    doc = json.loads(text)
    n = int(doc["n"])
    amps = np.array([complex(re, im) for re, im in doc["amps"]])
    registers = round(np.log(amps.size) / np.log(n))
    return QuditState(n, registers, amps), int(doc["k"])


# --- qubit case: relation to the five-qubit perfect code --------------------

# P(13524) read as one-line notation: register i moves to position ONE_LINE[i-1].
PERMUTATION_ONE_LINE = (1, 3, 5, 2, 4)
# the same symbol read as the cycle 1->3->5->2->4->1
PERMUTATION_CYCLE = (3, 4, 5, 1, 2)


def invert_permutation(perm) -> tuple:
    inv = [0] * len(perm)
    for i, target in enumerate(perm, start=1):
        inv[target - 1] = i
    return tuple(inv)


def compose_permutations(first, second) -> tuple:
    """Permutation that applies ``first`` then ``second`` (both as destination maps)."""
    return tuple(second[t - 1] for t in first)


def permute_registers(state: QuditState, perm) -> QuditState:
    """Move register ``i`` to position ``perm[i-1]`` (1-based destination map)."""
    perm = tuple(int(x) for x in perm)
    if sorted(perm) != list(range(1, state.registers + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{state.registers}")
    # new axis j holds old axis source[j]
    source = invert_permutation(perm)
    t = np.transpose(state.tensor, [s - 1 for s in source])
    return QuditState(state.n, state.registers, t)


def laflamme_phase(perm=PERMUTATION_ONE_LINE) -> np.ndarray:
    """Diagonal of the +-1 phase applied after ``perm``.

    The phase is -1 exactly when ``p + r + k`` is even, with ``p, r, k``
    read back from the permuted kets' digits (so the phase is defined on the
    whole space, not just on codeword support).
    """
    digits = basis_digits(2, REGISTERS)
    # original digit j sits at new position perm[j-1]
    orig = [digits[perm[j] - 1] for j in range(REGISTERS)]
    p = orig[3]
    r = (orig[1] - orig[3]) % 2
    k = (orig[0] - orig[3] - orig[4]) % 2
    return np.where((p + r + k) % 2 == 0, -1.0, 1.0)


def laflamme_transform(state: QuditState, perm=PERMUTATION_ONE_LINE) -> QuditState:
    """Permute registers, then flip the sign of kets with ``p + r + k`` even (qubits only)."""
    if state.n != 2 or state.registers != REGISTERS:
        raise ValueError("the perfect-code relabelling is defined for five qubits only")
    moved = permute_registers(state, perm)
    return QuditState(2, REGISTERS, moved.amps * laflamme_phase(perm))


def laflamme_printed_word(k: int, first_register: str = "printed") -> QuditState:
    """Five-qubit perfect-code word as printed in the literature form used here.

    ``first_register="printed"`` uses ``|p+q+1>`` in the first slot;
    ``"k"`` uses ``|p+q+k>``, the reading consistent with the codeword formula.
    """
    _check_logical(2, k)
    if first_register not in ("printed", "k"):
        raise ValueError("first_register must be 'printed' or 'k'")
    shift = 1 if first_register == "printed" else k
    amps = np.zeros(32, dtype=np.complex128)
    for p, q, r in itertools.product(range(2), repeat=3):
        sign = (-1) ** (((p + 1) * (r + 1) + k * (p + q + r + 1)) % 2)
        digits = ((p + q + shift) % 2, p, (p + r) % 2, q, (q + r) % 2)
        amps[np.ravel_multi_index(digits, (2,) * REGISTERS)] += sign
    return QuditState(2, REGISTERS, amps / np.sqrt(8))
