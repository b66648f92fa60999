"""
Why four registers are not enough
=================================

A four-register candidate that corrects any single error needs its reduced
states on registers 1,2 to be simultaneously equal for every logical level
and mutually orthogonal.  For nonzero density matrices both cannot hold, and
a random search confirms a sizeable gap.
"""

import numpy as np

from quditqecc.optimality import (
    falsifier_sweep,
    joint_residual_lower_bound,
    kl_constraint_residuals,
    nilpotency_chain,
    random_candidate,
    random_compliant_candidate,
)

for n, count in ((2, 1000), (3, 200)):
    rep = falsifier_sweep(n, count, seed=0)
    print(f"N={n}: {count} candidates, smallest joint residual {rep['min_joint_residual']:.4f} "
          f"(analytic floor {joint_residual_lower_bound(n):.4f})")

# the chain of inequalities for one candidate
ch = nilpotency_chain(random_candidate(2, 0))
print({k: round(v, 4) for k, v in ch.items()})

# making the words orthogonal on registers 1,2 forces the reduced states apart
orth, equal = kl_constraint_residuals(random_compliant_candidate(2, 0))
print(f"compliant candidate: orthogonality residual {orth:.1e}, equality residual {equal:.3f}")

# equal, orthogonal reduced states would give rho^2 = 0; for Hermitian rho every
# entry obeys |rho_ij|^2 <= max |(rho^2)_ij|, so rho itself would vanish
rng = np.random.default_rng(3)
h = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
h = h + h.conj().T
print(f"max |h_ij|^2 = {np.abs(h).max()**2:.3f} <= max |(h^2)_ij| = {np.abs(h @ h).max():.3f}")
