"""Recovery from single-register errors, built from the lambda matrix.

Diagonalizing ``lambda = U D U^dag`` gives a rotated error basis
``F_m = sum_a U_am E_a`` with ``<k|F_m^dag F_m'|k'> = d_m delta_mm' delta_kk'``.
Each ``F_m`` with ``d_m`` above the rank tolerance carries the code space
isometrically (after scaling by ``d_m^{-1/2}``) onto its own syndrome
subspace, and these subspaces are mutually orthogonal.  Nothing here assumes
that ``lambda`` is diagonal, so degenerate codes are handled the same way.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codewords import Codebook
from .kl import PASS_THRESHOLD, compute_lambda, error_images
from .paulis import ErrorSet
from .qudit_math import CodeParams, QuditState, _check_same_space

RANK_TOL = 1e-8
# lambda entries below this are rounding noise; zeroing them keeps eigh from
# rotating arbitrarily inside exactly degenerate eigenspaces
_CLEAN_TOL = 1e-12


class UndecodableError(RuntimeError):
    """The corrupted state has no weight on any syndrome subspace."""


class KLViolationError(ValueError):
    """The codebook does not satisfy the error-correction conditions for the error set."""


@dataclass(frozen=True, eq=False)
class RecoveryPlan:
    """Syndrome subspaces and their corrections.

    ``bases[m]`` has shape ``(n, dim)``; row ``k`` is ``F_m|k>/sqrt(d_m)``, and
    the correction for syndrome ``m`` maps that row back to codeword ``k``.
    """

    params: CodeParams
    codebook: Codebook
    bases: np.ndarray
    eigenvalues: np.ndarray
    syndrome_labels: list
    leftover_projector_rank: int

    @property
    def syndrome_count(self) -> int:
        return self.bases.shape[0]

    @property
    def corrected_dimension(self) -> int:
        return self.bases.shape[0] * self.bases.shape[1]

    def subspace_overlap_residual(self) -> float:
        """Max deviation of all syndrome basis vectors from orthonormality."""
        flat = self.bases.reshape(-1, self.bases.shape[-1])
        return float(np.abs(flat.conj() @ flat.T - np.eye(flat.shape[0])).max())

    def correction_isometry_residual(self) -> float:
        """How far each correction ``sum_k |k_code><f_mk|`` is from an isometry onto the code space."""
        words = self.codebook.matrix()
        worst = 0.0
        for basis in self.bases:
            # image of f_mk under the correction is words[k]; compare Gram matrices
            g_in = basis.conj() @ basis.T
            g_out = words.conj() @ words.T
            worst = max(worst, float(np.abs(g_in - g_out).max()))
        return worst


def build_recovery(codebook: Codebook, errors: ErrorSet, rank_tol: float = RANK_TOL) -> RecoveryPlan:
    lm = compute_lambda(codebook, errors)
    if lm.max_residual > PASS_THRESHOLD:
        raise KLViolationError(
            f"KL residual {lm.max_residual:.3e} exceeds {PASS_THRESHOLD:g}; refusing to build recovery"
        )
    lam = 0.5 * (lm.lam + lm.lam.conj().T)
    lam = np.where(np.abs(lam) < _CLEAN_TOL, 0.0, lam)
    evals, U = np.linalg.eigh(lam)
    # larger eigenvalues first; stable so ties keep error-set order
    order = np.argsort(-evals, kind="stable")
    evals, U = evals[order], U[:, order]
    keep = evals > rank_tol

    images = error_images(codebook, errors)
    rotated = np.einsum("am,akd->mkd", U[:, keep], images)
    bases = rotated / np.sqrt(evals[keep])[:, None, None]

    labels = [errors.labels[int(np.argmax(np.abs(U[:, m])))] for m in np.flatnonzero(keep)]
    dim = images.shape[-1]
    leftover = dim - bases.shape[0] * bases.shape[1]
    return RecoveryPlan(codebook.params, codebook, bases, evals, labels, leftover)


def syndrome_weights(plan: RecoveryPlan, state: QuditState) -> np.ndarray:
    """Squared norm of the projection onto each syndrome subspace."""
    coeffs = plan.bases.conj() @ state.amps
    return np.sum(np.abs(coeffs) ** 2, axis=1)


def decode(plan: RecoveryPlan, corrupted: QuditState, tol: float = 1e-12) -> tuple[QuditState, str]:
    """Project onto the heaviest syndrome subspace and undo it.

    Ties go to the lowest syndrome index.  Returns the normalized recovered
    state and the label of the chosen syndrome.
    """
    _check_same_space(plan.codebook.words[0], corrupted)
    coeffs = plan.bases.conj() @ corrupted.amps  # (m, n)
    weights = np.sum(np.abs(coeffs) ** 2, axis=1)
    m = int(np.argmax(weights))
    total = corrupted.norm() ** 2
    if total == 0 or weights[m] <= tol * total:
        raise UndecodableError("state has no overlap with any syndrome subspace")
    recovered = coeffs[m] @ plan.codebook.matrix()
    out = QuditState(corrupted.n, corrupted.registers, recovered).normalized()
    return out, plan.syndrome_labels[m]


def logical_fidelity(a: QuditState, b: QuditState) -> float:
    """``|<a|b>|^2 / (<a|a><b|b>)``."""
    _check_same_space(a, b)
    na = np.vdot(a.amps, a.amps).real
    nb = np.vdot(b.amps, b.amps).real
    if na == 0 or nb == 0:
        raise ValueError("fidelity undefined for a zero-norm state")
    return float(abs(np.vdot(a.amps, b.amps)) ** 2 / (na * nb))


def random_logical_coefficients(n: int, rng: np.random.Generator) -> np.ndarray:
    c = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return c / np.linalg.norm(c)
