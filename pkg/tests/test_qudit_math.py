import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quditqecc.paulis import clock_op, shift_op
from quditqecc.qudit_math import (
    CodeParams,
    DimensionMismatchError,
    InvalidDimensionError,
    QuditState,
    apply_on_register,
    basis_state,
    character_sum,
    embed_on_register,
    inner_product,
    partial_trace,
    primitive_root,
)


@pytest.mark.parametrize(
    "n, expected",
    [(2, -1), (4, 1j), (3, complex(-0.5, np.sqrt(3) / 2))],
)
def test_primitive_root_values(n, expected):
    assert abs(primitive_root(n) - expected) < 1e-15


def test_primitive_root_rejects_small_dimension():
    with pytest.raises(InvalidDimensionError):
        primitive_root(1)
    with pytest.raises(InvalidDimensionError):
        CodeParams(0)


@pytest.mark.parametrize("n", range(2, 9))
def test_code_params_primitivity(n):
    p = CodeParams(n)
    assert p.is_primitive()
    assert abs(p.omega - cmath.exp(2j * cmath.pi / n)) < 1e-15


def test_code_params_tolerance_bounds():
    with pytest.raises(ValueError):
        CodeParams(3, tol=1e-3)
    with pytest.raises(ValueError):
        CodeParams(3, tol=0.0)


@pytest.mark.parametrize("n, k, expected", [(5, 0, 5), (5, 3, 0), (2, 1, 0)])
def test_character_sum_examples(n, k, expected):
    assert abs(character_sum(n, k) - expected) < 1e-12


@pytest.mark.parametrize("n", range(2, 9))
def test_character_sum_table(n):
    for k in range(0, 2 * n + 1):
        expected = n if k % n == 0 else 0
        assert abs(character_sum(n, k) - expected) < 1e-12


def test_character_sum_negative_and_large_exponents():
    assert abs(character_sum(7, -14) - 7) < 1e-12
    assert abs(character_sum(7, 10**12 + 1)) < 1e-12


def test_embed_identity_is_identity():
    assert np.allclose(embed_on_register(np.eye(2), 3), np.eye(32))


def test_embed_shift_on_last_register():
    op = embed_on_register(shift_op(2), 5)
    out = op @ basis_state(2, "00000").amps
    assert np.allclose(out, basis_state(2, (0, 0, 0, 0, 1)).amps)


def test_embed_clock_on_first_register():
    w3 = primitive_root(3)
    ket = basis_state(3, (2, 0, 0, 0, 0))
    out = embed_on_register(clock_op(3), 1) @ ket.amps
    assert np.allclose(out, w3**2 * ket.amps)


def test_embed_rejects_bad_register():
    with pytest.raises(IndexError):
        embed_on_register(np.eye(2), 6)
    with pytest.raises(IndexError):
        embed_on_register(np.eye(2), 0)


def test_embed_refuses_large_materialization():
    with pytest.raises(MemoryError):
        embed_on_register(np.eye(5), 1)


@pytest.mark.parametrize("n", [2, 3])
def test_slotwise_application_matches_dense_embedding(n):
    rng = np.random.default_rng(n)
    op = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    psi = QuditState(n, 5, rng.normal(size=n**5) + 1j * rng.normal(size=n**5))
    for i in range(1, 6):
        dense = embed_on_register(op, i) @ psi.amps
        assert np.allclose(apply_on_register(op, i, psi).amps, dense, atol=1e-12)


@pytest.mark.parametrize("i, j", [(1, 2), (1, 5), (2, 4), (3, 5)])
def test_disjoint_embeddings_commute(i, j):
    rng = np.random.default_rng(10 * i + j)
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    A, B = embed_on_register(a, i), embed_on_register(b, j)
    assert np.abs(A @ B - B @ A).max() < 1e-12


def test_inner_product_examples():
    s = basis_state(3, (1, 2, 0, 0, 1))
    t = basis_state(3, (1, 2, 0, 0, 2))
    assert abs(inner_product(s, s) - 1) < 1e-15
    assert inner_product(s, t) == 0


def test_inner_product_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        inner_product(basis_state(2, "00000"), basis_state(3, "00000"))
    with pytest.raises(DimensionMismatchError):
        inner_product(basis_state(2, "0000"), basis_state(2, "00000"))


complex_vec = st.lists(
    st.tuples(st.floats(-10, 10), st.floats(-10, 10)), min_size=16, max_size=16
).map(lambda xs: np.array([complex(a, b) for a, b in xs]))


@settings(max_examples=60, deadline=None)
@given(complex_vec, complex_vec)
def test_inner_product_conjugate_symmetry(a, b):
    sa, sb = QuditState(2, 4, a), QuditState(2, 4, b)
    assert abs(inner_product(sa, sb) - np.conj(inner_product(sb, sa))) < 1e-9
    assert inner_product(sa, sa).real >= 0
    assert abs(inner_product(sa, sa).imag) < 1e-9


def test_state_rejects_wrong_length():
    with pytest.raises(DimensionMismatchError):
        QuditState(2, 5, np.zeros(31))


def test_state_is_immutable():
    s = basis_state(2, "00000")
    with pytest.raises(ValueError):
        s.amps[0] = 2


def test_big_endian_index():
    assert np.flatnonzero(basis_state(3, (1, 0, 0, 0, 2)).amps)[0] == 81 + 2


def test_partial_trace_product_state():
    # |0>|+> on two qubits: tracing the second leaves |0><0|
    plus = np.array([1, 1]) / np.sqrt(2)
    psi = QuditState(2, 2, np.kron([1, 0], plus))
    assert np.allclose(partial_trace(psi, [1]), [[1, 0], [0, 0]])
    assert np.allclose(partial_trace(psi, [2]), np.outer(plus, plus))
