"""Exact Hankel determinants of shifted Catalan sequences.

Three independent routes to det(C_{i+j+r}) are provided and cross-checked:
Bareiss elimination on the n x n Hankel matrix, the r x r binomial
(Cigler) matrix, and closed-form products.
"""

from .closed_form import (
    check_point,
    eval_general,
    eval_shift4,
    eval_shift5,
    eval_shift6,
    eval_shift7,
    polynomial_identity_check,
    sweep,
)
from .errors import (
    DimensionCapExceeded,
    EmptySequence,
    HankelError,
    InternalExactDivisionViolation,
    MethodUnavailable,
    NotSquare,
    ParseError,
    SequenceIOError,
    SequenceTooShort,
)
from .exact_linalg import ExactMatrix, det, det_bareiss, det_laplace
from .hankel import (
    ConsistencyRecord,
    HankelSpec,
    cigler_matrix,
    hankel_matrix,
    hankel_transform,
)
from .sequences import (
    CATALAN,
    SequenceSource,
    binomial,
    catalan,
    catalan_prefix,
    load_sequence,
)

__version__ = "0.1.0"
