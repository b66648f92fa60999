"""
The encoding circuit
====================

Twelve gates (generalized CNOTs, Fourier transforms and one controlled
phase) take |k,0,0,0,0> to the codeword, including its global phase.
"""

from quditqecc import build_encoding_circuit, encode
from quditqecc.circuit import circuit_unitary_check
from quditqecc.qudit_math import basis_state, inner_product

circ = build_encoding_circuit(3)
for g in circ.gates:
    print(g.to_dict())

for n in (2, 3, 4, 5):
    circ = build_encoding_circuit(n)
    worst = max(abs(inner_product(encode(n, k), circ.run(basis_state(n, (k, 0, 0, 0, 0)))) - 1)
                for k in range(n))
    print(f"N={n}: max |<enc|circuit> - 1| = {worst:.1e}, "
          f"unitarity residual {circuit_unitary_check(circ):.1e}")

# circuits serialize to JSON
print(build_encoding_circuit(2).to_json()[:120], "...")
