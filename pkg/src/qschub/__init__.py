"""Exact Schubert calculus on affine Weyl groups: Pontryagin products on
H_*^T(Omega K) and (equivariant) quantum products on G/B."""

from .affine import AffineRoot, AffineWeylElement, AffineWeylGroup
from .coefficients import c_all, c_bracket, c_coeff, d_bracket, d_coeff, d_row, verify_inverse
from .errors import BoundExceeded, InadmissibleType, InconsistencyError
from .pontryagin import FormalSum, loop_cohomology_constants, pontryagin_constants
from .quantum import (
    QuantumSum,
    TranslationChoice,
    choose_translations,
    classical_constants,
    equivariant_qconstants,
    equivariant_quantum_chevalley,
    gromov_witten,
    quantum_product,
)
from .rootsystem import FiniteWeylElement, LieType, RootSystem
from .symbolic import LinearForm, Polynomial, RationalForm

__all__ = [
    "AffineRoot", "AffineWeylElement", "AffineWeylGroup", "BoundExceeded", "FiniteWeylElement",
    "FormalSum", "InadmissibleType", "InconsistencyError", "LieType", "LinearForm", "Polynomial",
    "QuantumSum", "RationalForm", "RootSystem", "TranslationChoice", "c_all", "c_bracket", "c_coeff",
    "choose_translations", "classical_constants", "d_bracket", "d_coeff", "d_row",
    "equivariant_qconstants", "equivariant_quantum_chevalley", "gromov_witten",
    "loop_cohomology_constants", "pontryagin_constants", "quantum_product", "verify_inverse",
]
