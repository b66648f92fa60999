"""
Syndrome decoding
=================

The images of the code space under each correctable error are mutually
orthogonal.  Decoding projects onto them, picks the heaviest, and undoes
the error.
"""

import numpy as np

from quditqecc import build_codebook, build_recovery, decode, full_pauli_error_set, logical_fidelity
from quditqecc.decoder import UndecodableError, random_logical_coefficients
from quditqecc.paulis import pauli_error, random_single_register_error

# for qubits the 16 syndrome subspaces fill the whole 32-dimensional space
for n in (2, 3):
    plan = build_recovery(build_codebook(n), full_pauli_error_set(n))
    print(f"N={n}: {plan.syndrome_count} syndromes, corrected dimension "
          f"{plan.corrected_dimension} of {n**5}, leftover {plan.leftover_projector_rank}")

n = 3
book = build_codebook(n)
plan = build_recovery(book, full_pauli_error_set(n))
rng = np.random.default_rng(1)
psi = book.encode_logical(random_logical_coefficients(n, rng))

# a Pauli error is identified by name
out, syn = decode(plan, pauli_error(n, 4, 1, 2).apply(psi))
print(f"syndrome {syn!r}, fidelity {logical_fidelity(out, psi):.12f}")

# an arbitrary unitary on one register is a superposition of Paulis; it is corrected too
fids = []
for seed in range(20):
    out, _ = decode(plan, random_single_register_error(n, seed).apply(psi))
    fids.append(logical_fidelity(out, psi))
print(f"20 random unitaries: min fidelity {min(fids):.12f}")

# two errors at once are outside the design
try:
    out, syn = decode(plan, pauli_error(n, 1, 1, 0).apply(pauli_error(n, 2, 0, 1).apply(psi)))
    print(f"weight-2 error misread as {syn!r}: fidelity {logical_fidelity(out, psi):.3f}")
except UndecodableError as exc:
    print("weight-2 error:", exc)
