"""
Relation to the five-qubit perfect code
=======================================

For qubits, relabelling the registers and flipping signs maps our code
onto the well-known five-qubit code.  The comparison also shows which form
of that code's first register is consistent.
"""

from quditqecc.equivalence import laflamme_equivalence_report

rep = laflamme_equivalence_report()
for row in rep["comparisons"]:
    devs = ", ".join(f"{d:.2f}" for d in row["max_deviation"])
    print(f"{row['permutation']:>16} / {row['first_register']:6}  deviation per word [{devs}]"
          f"  exact={row['exact']}  single-register fix={row['shift_fixes_register']}")

print("matching reading:", rep["matching"])
print(f"transformed code residual {rep['transformed_code_residual']:.1e}")
for family, lam in rep["lambda"].items():
    print(f"{family}: lambda difference {lam['lambda_difference']:.1e}, "
          f"offdiag residual of the family {lam['family_offdiag_residual']:.2f}")
