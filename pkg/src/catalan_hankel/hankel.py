"""Shifted Hankel matrices, the Cigler binomial matrix and Hankel transforms."""

from dataclasses import dataclass, field

from .exact_linalg import ExactMatrix, det_bareiss
from .sequences import CATALAN, SequenceSource, binomial


@dataclass(frozen=True)
class HankelSpec:
    source: SequenceSource
    order_n: int
    shift_r: int

    def __post_init__(self):
        if self.order_n < 0 or self.shift_r < 0:
            raise ValueError("order_n and shift_r must be non-negative")

    @property
    def terms_needed(self):
        """Number of leading terms a_0 .. a_{2n-2+r} the matrix touches."""
        if self.order_n == 0:
            return 0
        return 2 * self.order_n - 2 + self.shift_r + 1


@dataclass(frozen=True)
class ConsistencyRecord:
    order_n: int
    shift_r: int
    direct_value: int
    cigler_value: int
    closed_form_value: int
    agree: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "agree",
            self.direct_value == self.cigler_value == self.closed_form_value,
        )


def hankel_matrix(spec):
    """n x n matrix with entry (i, j) = a_{i+j+r}."""
    n, r = spec.order_n, spec.shift_r
    terms = spec.source.prefix(spec.terms_needed)
    return ExactMatrix.from_function(n, n, lambda i, j: terms[i + j + r])


def catalan_hankel_matrix(order_n, shift_r):
    return hankel_matrix(HankelSpec(CATALAN, order_n, shift_r))


def cigler_matrix(order_n, shift_r):
    """r x r matrix with entry (i, j) = binomial(i+j+n, i-j+n)."""
    if order_n < 0 or shift_r < 0:
        raise ValueError("order_n and shift_r must be non-negative")
    n = order_n
    return ExactMatrix.from_function(
        shift_r, shift_r, lambda i, j: binomial(i + j + n, i - j + n)
    )


def hankel_transform(source, shift_r, max_n):
    """[det H_0, det H_1, ..., det H_max_n] for the given shift."""
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    # fail fast on the largest instance before doing any elimination
    source.prefix(HankelSpec(source, max_n, shift_r).terms_needed)
    return [
        det_bareiss(hankel_matrix(HankelSpec(source, n, shift_r)))
        for n in range(max_n + 1)
    ]
