"""
Building the five-register codewords
====================================

Each logical level k of an N-level system is spread over five registers.
The qubit case is small enough to print in full.
"""

import numpy as np

from quditqecc import build_codebook, encode
from quditqecc.qudit_math import basis_digits

# the two qubit codewords, term by term
for k in range(2):
    w = encode(2, k)
    digits = basis_digits(2, 5)
    terms = [
        ("+" if w.amps[i].real > 0 else "-") + "|" + "".join(map(str, digits[:, i])) + ">"
        for i in np.flatnonzero(np.abs(w.amps) > 1e-12)
    ]
    print(f"|{k}_enc> = (1/sqrt 8) [" + " ".join(terms) + "]")

# every codeword has N^3 nonzero amplitudes of modulus N^{-3/2}
for n in (2, 3, 4, 5):
    book = build_codebook(n)
    nz = [np.count_nonzero(np.abs(w.amps) > 1e-12) for w in book.words]
    print(f"N={n}: nonzero terms per word {set(nz)}, Gram deviation "
          f"{np.abs(book.gram() - np.eye(n)).max():.1e}")

# a logical superposition is the same linear combination of codewords
book = build_codebook(3)
psi = book.encode_logical([1, 1j, 0])
print("logical coefficients recovered:", np.round(book.logical_coefficients(psi), 12))
