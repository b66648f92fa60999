import numpy as np
import pytest

from quditqecc.paulis import (
    ErrorSet,
    clock_op,
    full_pauli_error_set,
    identity_error,
    matrix_unit,
    matrix_unit_error_set,
    pauli_error,
    pauli_op,
    random_single_register_error,
    shift_op,
)
from quditqecc.qudit_math import CodeParams, QuditState, embed_on_register, primitive_root


def test_qubit_paulis():
    assert np.array_equal(shift_op(2), [[0, 1], [1, 0]])
    assert np.allclose(clock_op(2), [[1, 0], [0, -1]])


@pytest.mark.parametrize("n", range(2, 7))
def test_shift_clock_basic_relations(n):
    X, Z = shift_op(n), clock_op(n)
    assert np.allclose(np.linalg.matrix_power(X, n), np.eye(n))
    assert np.allclose(X.conj().T @ X, np.eye(n))
    assert np.allclose(Z.conj().T @ Z, np.eye(n))
    assert np.abs(Z @ X - primitive_root(n) * X @ Z).max() < 1e-12


def test_shift_moves_basis_up():
    X = shift_op(4)
    for m in range(4):
        e = np.zeros(4)
        e[m] = 1
        assert np.argmax(X @ e) == (m + 1) % 4


def test_n3_commutation_by_hand():
    w = primitive_root(3)
    X = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    Z = np.diag([1, w, w**2])
    assert np.abs(clock_op(3) @ shift_op(3) - w * shift_op(3) @ clock_op(3)).max() < 1e-12
    assert np.allclose(Z @ X, w * X @ Z)


@pytest.mark.parametrize("n, size", [(2, 16), (3, 41), (4, 76), (5, 121)])
def test_full_pauli_set_sizes(n, size):
    es = full_pauli_error_set(n)
    assert len(es) == size == 1 + 5 * (n * n - 1)
    assert es[0].kind == "identity"
    assert len({e.ident for e in es}) == size


@pytest.mark.parametrize("n", [2, 3, 5])
def test_pauli_basis_is_trace_orthogonal(n):
    ops = [pauli_op(n, a, b) for a in range(n) for b in range(n)]
    g = np.array([[np.trace(p.conj().T @ q) for q in ops] for p in ops])
    assert np.abs(g - n * np.eye(n * n)).max() < 1e-10


def test_arbitrary_operator_decomposes_over_paulis():
    n = 3
    rng = np.random.default_rng(1)
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rebuilt = sum(
        np.trace(pauli_op(n, a, b).conj().T @ m) / n * pauli_op(n, a, b) for a in range(n) for b in range(n)
    )
    assert np.allclose(rebuilt, m)


def test_pauli_zero_zero_is_identity():
    assert np.allclose(pauli_op(4, 0, 0), np.eye(4))


def test_matrix_unit_single_entry():
    m = matrix_unit(3, 2, 0)
    assert np.count_nonzero(m) == 1 and m[2, 0] == 1


def test_matrix_unit_error_set():
    es = matrix_unit_error_set(2, [3, 4])
    assert len(es) == 1 + 2 * 4


def test_error_set_rejects_duplicates_and_missing_identity():
    p = CodeParams(2)
    e = pauli_error(2, 1, 1, 0)
    with pytest.raises(ValueError):
        ErrorSet(p, (identity_error(2), e, pauli_error(2, 1, 1, 0)))
    with pytest.raises(ValueError):
        ErrorSet(p, (e,))


@pytest.mark.parametrize("n", [2, 3])
def test_register_error_action_matches_embedding(n):
    rng = np.random.default_rng(n)
    psi = QuditState(n, 5, rng.normal(size=n**5) + 1j * rng.normal(size=n**5))
    for e in full_pauli_error_set(n):
        assert np.allclose(e.apply(psi).amps, e.dense() @ psi.amps)
        if e.register is not None:
            assert np.allclose(e.dense(), embed_on_register(e.op, e.register))


def test_pauli_labels():
    assert pauli_error(3, 2, 1, 2).label == "X^1 Z^2 @ reg 2"


@pytest.mark.parametrize("seed", range(10))
def test_random_error_unitary(seed):
    e = random_single_register_error(3, seed)
    assert np.abs(e.op.conj().T @ e.op - np.eye(3)).max() < 1e-9
    assert 1 <= e.register <= 5


def test_random_error_deterministic():
    a = random_single_register_error(4, 123)
    b = random_single_register_error(4, 123)
    assert a.register == b.register and np.array_equal(a.op, b.op)
    assert not np.array_equal(a.op, random_single_register_error(4, 124).op)


def test_random_register_histogram_uniform():
    trials = 10_000
    counts = np.bincount([random_single_register_error(2, s).register for s in range(trials)], minlength=6)[1:]
    expected = trials / 5
    sigma = np.sqrt(trials * 0.2 * 0.8)
    assert np.all(np.abs(counts - expected) < 5 * sigma)
