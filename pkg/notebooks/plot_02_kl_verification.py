"""
Checking the error-correction conditions
========================================

For every pair of single-register Pauli errors (A, B) the overlaps
<k|A^dag B|k'> must vanish for k != k' and must not depend on k.
"""

import numpy as np

from quditqecc import build_codebook, compute_lambda, full_pauli_error_set
from quditqecc import kl
from quditqecc.paulis import shift_op

for n in (2, 3, 4, 5):
    es = full_pauli_error_set(n)
    lm = compute_lambda(build_codebook(n), es)
    print(f"N={n}: {len(es):3d} errors  diag {lm.diag_residual:.1e}  "
          f"offdiag {lm.offdiag_residual:.1e}  status {lm.status()}")

# lambda is the identity here, so distinct errors map the code to
# orthogonal subspaces: the code is nondegenerate
lm = compute_lambda(build_codebook(3), full_pauli_error_set(3))
print("lambda == identity:", np.allclose(lm.lam, np.eye(len(lm.lam))))

# closed-form expressions for error pairs agree with brute force
rng = np.random.default_rng(0)
book = build_codebook(3)
for (a, b), fn in sorted(kl.CLOSED_FORMS.items()):
    A = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    B = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    print(f"registers ({a},{b}): |closed - computed| = "
          f"{abs(fn(3, A, B) - kl.lambda_entry(book, a, A, b, B)):.1e}")

# collapsing the shift sum too early is only right for diagonal operators
X = shift_op(3)
print("X on 2, X^2 on 3:", round(abs(kl.lambda_entry(book, 2, X, 3, X @ X)), 12),
      "vs shift-sum variant", round(abs(kl.lambda_23_with_shift_sum(3, X, X @ X)), 12))

# the report names the pair with the largest residual
rep = kl.verification_report(build_codebook(2), full_pauli_error_set(2), timing=False)
print("worst pair for the intact qubit code:", rep["worst_pair"])
