"""Exact kernel and identity checker for commutative superalgebras with derivation brackets."""

from .brackets import (
    TPStructure,
    VectorField,
    even_lie_bracket,
    jordan_sum_product,
    module_action,
    pseudo_bracket,
    ternary_bracket,
    vf_bracket,
    vf_graded_commutator,
    vector_field,
)
from .core import (
    ANY_PARITY,
    INHOMOGENEOUS,
    AlgebraSignature,
    Element,
    Monomial,
    Parity,
    decompose_homogeneous,
    linear_combine,
    mul,
    parity_of,
)
from .derivations import Derivation, apply, graded_commutator, is_square_zero, make_derivation, partial

__version__ = "0.1.0"
