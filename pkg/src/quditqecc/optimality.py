"""Why four registers are not enough.

For a would-be four-register code with words ``sum alpha^{(i)}_{pqrs} |p,q,r,s>``
let ``rho^{(i)}_{p'q';pq} = sum_{r,s} conj(alpha^{(i)}_{p'q'rs}) alpha^{(i)}_{pqrs}``
(the reduced state of registers 1, 2, in the transposed index convention).

* Matrix-unit errors on registers 3 and 4 with ``i != j`` force
  ``rho^{(i)} rho^{(j)} = 0``.
* Matrix-unit errors on registers 1 and 2 with ``i = j`` force
  ``rho^{(i)} = rho^{(j)}``.

Together ``rho^2 = 0`` for a Hermitian ``rho`` of unit trace, which is
impossible.  This module measures how badly concrete candidates violate the
two constraints, and makes the impossibility quantitative: see
:func:`joint_residual_lower_bound`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .codewords import Codebook
from .qudit_math import CodeParams, QuditState

REGISTERS = 4


@dataclass(frozen=True, eq=False)
class CandidateCode4:
    """``alpha[i, p, q, r, s]``: ``n`` orthonormal four-register words."""

    params: CodeParams
    alpha: np.ndarray

    def __post_init__(self):
        n = self.params.n
        a = np.asarray(self.alpha, dtype=np.complex128)
        if a.shape != (n,) * 5:
            raise ValueError(f"alpha must have shape {(n,) * 5}, got {a.shape}")
        object.__setattr__(self, "alpha", a)

    @property
    def n(self) -> int:
        return self.params.n

    def word(self, i: int) -> QuditState:
        return QuditState(self.n, REGISTERS, self.alpha[i])

    def codebook(self) -> Codebook:
        return Codebook(self.params, tuple(self.word(i) for i in range(self.n)))

    def isometry_residual(self) -> float:
        m = self.alpha.reshape(self.n, -1)
        return float(np.abs(m.conj() @ m.T - np.eye(self.n)).max())


def random_candidate(params: CodeParams | int, seed) -> CandidateCode4:
    """Orthonormalize ``n`` seeded complex Gaussian vectors in the ``n**4`` space."""
    if not isinstance(params, CodeParams):
        params = CodeParams(int(params))
    n = params.n
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n**4, n)) + 1j * rng.standard_normal((n**4, n))
    q, _ = np.linalg.qr(z)
    return CandidateCode4(params, q.T.reshape((n,) * 5))


def random_compliant_candidate(params: CodeParams | int, seed) -> CandidateCode4:
    """Candidate that satisfies every register-3/4 matrix-unit condition.

    Word ``i`` lives in ``span{|i, q>} x (anything on registers 3, 4)``, so
    different words have orthogonal supports on registers 1, 2 and every
    ``<i|A^dag B|j>`` with A, B on registers 3, 4 vanishes for ``i != j``.
    """
    if not isinstance(params, CodeParams):
        params = CodeParams(int(params))
    n = params.n
    rng = np.random.default_rng(seed)
    alpha = np.zeros((n,) * 5, dtype=np.complex128)
    for i in range(n):
        blk = rng.standard_normal((n, n, n)) + 1j * rng.standard_normal((n, n, n))
        alpha[i, i] = blk / np.linalg.norm(blk)
    return CandidateCode4(params, alpha)


def reduced_density(c: CandidateCode4, i: int) -> np.ndarray:
    """``rho^{(i)}`` as an ``n^2 x n^2`` matrix, rows ``(p', q')`` and columns ``(p, q)``."""
    if not 0 <= i < c.n:
        raise IndexError(f"logical index {i} outside 0..{c.n - 1}")
    a = c.alpha[i].reshape(c.n**2, c.n**2)
    return a.conj() @ a.T


def reduced_density_bruteforce(c: CandidateCode4, i: int) -> np.ndarray:
    """Index-by-index evaluation of the same sum; slow, used as an oracle."""
    n = c.n
    a = c.alpha[i]
    rho = np.zeros((n * n, n * n), dtype=np.complex128)
    for pp, qq, p, q in itertools.product(range(n), repeat=4):
        acc = 0j
        for r in range(n):
            for s in range(n):
                acc += np.conj(a[pp, qq, r, s]) * a[p, q, r, s]
        rho[pp * n + qq, p * n + q] = acc
    return rho


def kl_constraint_residuals(c: CandidateCode4) -> tuple[float, float]:
    """``(max_{i!=j} ||rho_i rho_j||_max, max_{i!=j} ||rho_i - rho_j||_max)``."""
    rhos = [reduced_density(c, i) for i in range(c.n)]
    orth = equal = 0.0
    for i, j in itertools.permutations(range(c.n), 2):
        orth = max(orth, float(np.abs(rhos[i] @ rhos[j]).max()))
        equal = max(equal, float(np.abs(rhos[i] - rhos[j]).max()))
    return orth, equal


def joint_residual(c: CandidateCode4) -> float:
    return max(kl_constraint_residuals(c))


def joint_residual_lower_bound(n: int) -> float:
    """Smallest ``max(orth, equal)`` any valid four-register candidate can reach.

    With ``D = n^2``, ``eps`` bounding both residuals and ``rho = rho^{(0)}``:
    ``rho^2 = rho rho^{(1)} + rho (rho - rho^{(1)})`` so
    ``||rho^2||_max <= eps + D ||rho||_max eps <= (1 + D) eps`` since entries
    of a density matrix are at most 1.  On the other hand
    ``(rho^2)_{ii} = sum_j |rho_ij|^2 >= rho_ii^2 >= 1/D^2`` for the largest
    diagonal entry of a trace-one matrix.  Hence ``eps >= 1 / (D^2 (1 + D))``.
    """
    d = n * n
    return 1.0 / (d * d * (1 + d))


def nilpotency_chain(c: CandidateCode4) -> dict:
    """Every quantity in the impossibility argument, evaluated on ``c``."""
    orth, equal = kl_constraint_residuals(c)
    rho = reduced_density(c, 0)
    d = c.n**2
    sq = float(np.abs(rho @ rho).max())
    return {
        "orth_residual": orth,
        "equal_residual": equal,
        "rho_sq_max": sq,
        "rho_sq_upper_bound": orth + d * float(np.abs(rho).max()) * equal,
        "rho_sq_lower_bound": float(np.real(np.diag(rho)).max() ** 2),
        "trace": float(np.trace(rho).real),
        "joint_lower_bound": joint_residual_lower_bound(c.n),
    }


def nilpotent_hermitian_is_zero(rho: np.ndarray, tol: float = 1e-12, herm_tol: float = 1e-9) -> bool:
    """Check ``||rho^2||_max < tol  =>  ||rho||_max <= sqrt(tol)`` for Hermitian ``rho``.

    For Hermitian ``rho`` the diagonal of ``rho^2`` is ``sum_j |rho_ij|^2``,
    so every entry obeys ``|rho_ij|^2 <= ||rho^2||_max``.  Returns False only
    for a counterexample to that implication.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("rho must be square")
    if np.abs(rho - rho.conj().T).max() > herm_tol:
        raise ValueError("rho is not Hermitian")
    sq = float(np.abs(rho @ rho).max())
    if sq >= tol:
        return True
    return float(np.abs(rho).max()) <= np.sqrt(tol) * (1 + 1e-9)


def falsifier_sweep(params: CodeParams | int, candidates: int, seed: int = 0) -> dict:
    """Scan seeded random candidates for the smallest joint residual."""
    if not isinstance(params, CodeParams):
        params = CodeParams(int(params))
    seeds = np.random.SeedSequence(seed).generate_state(candidates)
    best, best_seed = np.inf, None
    for s in seeds:
        r = joint_residual(random_candidate(params, int(s)))
        if r < best:
            best, best_seed = r, int(s)
    return {
        "n": params.n,
        "candidates": candidates,
        "min_joint_residual": float(best),
        "argmin_seed": best_seed,
        "joint_lower_bound": joint_residual_lower_bound(params.n),
    }
