"""Five-register quantum error-correcting code for n-level systems."""

from .circuit import Circuit, Gate, apply_gate, build_encoding_circuit, circuit_unitary_check
from .codewords import Codebook, build_codebook, encode, laflamme_transform
from .decoder import RecoveryPlan, UndecodableError, build_recovery, decode, logical_fidelity
from .kl import LambdaMatrix, compute_lambda, kl_residual
from .optimality import CandidateCode4, kl_constraint_residuals, random_candidate, reduced_density
from .paulis import ErrorSet, RegisterError, clock_op, full_pauli_error_set, shift_op
from .qudit_math import (
    CodeParams,
    QuditState,
    character_sum,
    embed_on_register,
    inner_product,
    primitive_root,
)

__version__ = "0.1.0"
