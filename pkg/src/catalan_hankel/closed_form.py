"""Product formulas for det(C_{i+j+r}) and the three-way consistency check.

Every evaluator assembles the full integer numerator and divides once at the
end. A non-zero remainder means the formula (or its reading) is wrong, so it
raises instead of rounding.
"""

from math import factorial, prod

from .errors import InternalExactDivisionViolation
from .exact_linalg import det_bareiss
from .hankel import ConsistencyRecord, catalan_hankel_matrix, cigler_matrix

SPECIALIZED_SHIFTS = (4, 5, 6, 7)
IDENTITY_SAMPLES = 41


def _exact_div(num, den, what):
    q, rem = divmod(num, den)
    if rem:
        raise InternalExactDivisionViolation(f"{what}: {num} / {den} leaves remainder {rem}")
    return q


def _check_n(n):
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")


def eval_shift4(n):
    _check_n(n)
    num = 4 * (n + 1) * (n + 2) ** 2 * (n + 3) * (2 * n + 3) * (2 * n + 5)
    return _exact_div(num, factorial(3) * factorial(5), f"shift 4, n={n}")


def eval_shift5(n):
    _check_n(n)
    num = (
        8
        * (n + 1) * (n + 2) ** 2 * (n + 3) ** 2 * (n + 4)
        * (2 * n + 3) * (2 * n + 5) ** 2 * (2 * n + 7)
    )
    return _exact_div(num, factorial(5) * factorial(7), f"shift 5, n={n}")


def eval_shift6(n):
    _check_n(n)
    num = (
        2 ** 5
        * (n + 1) * (n + 2) ** 2 * (n + 3) ** 3 * (n + 4) ** 2 * (n + 5)
        * (2 * n + 3) * (2 * n + 5) ** 2 * (2 * n + 7) ** 2 * (2 * n + 9)
    )
    return _exact_div(num, 5 * factorial(7) * factorial(9), f"shift 6, n={n}")


def eval_shift7(n):
    _check_n(n)
    num = (
        3 * 2 ** 10
        * (n + 1) * (n + 2) ** 2 * (n + 3) ** 3 * (n + 4) ** 3 * (n + 5) ** 2 * (n + 6)
        * (2 * n + 3) * (2 * n + 5) ** 2 * (2 * n + 7) ** 3 * (2 * n + 9) ** 2 * (2 * n + 11)
    )
    return _exact_div(
        num, factorial(7) * factorial(9) * factorial(11), f"shift 7, n={n}"
    )


SPECIALIZED = {4: eval_shift4, 5: eval_shift5, 6: eval_shift6, 7: eval_shift7}


def general_numerator(n, r):
    """(n+1)...(n+r-1) times, for j = 0..r-3, the row

        (r-2-j)! * (2n+3+j)(2n+5+j)...(2n+2r-3-j)

    which runs from (2n+3)...(2n+2r-3) (r-2)! down to (2n+r) 1!.
    """
    num = prod(n + k for k in range(1, r))
    for j in range(r - 2):
        num *= factorial(r - 2 - j) * prod(2 * n + 3 + j + 2 * i for i in range(r - 2 - j))
    return num


def general_denominator(r):
    """3! 5! ... (2r-3)!"""
    return prod(factorial(2 * k - 1) for k in range(2, r))


def eval_general(n, r):
    """det(C_{i+j+r}), 0 <= i, j < n, from the general product formula.

    Shifts 0..3 fall out of the empty products as 1, 1, n+1 and
    (n+1)(n+2)(2n+3)/6.
    """
    _check_n(n)
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    return _exact_div(general_numerator(n, r), general_denominator(r), f"general, n={n}, r={r}")


def check_point(n, r):
    """Evaluate all three routes at (n, r). Disagreement is recorded, not raised."""
    return ConsistencyRecord(
        order_n=n,
        shift_r=r,
        direct_value=det_bareiss(catalan_hankel_matrix(n, r)),
        cigler_value=det_bareiss(cigler_matrix(n, r)),
        closed_form_value=eval_general(n, r),
    )


def sweep(max_n, max_r):
    return [check_point(n, r) for r in range(max_r + 1) for n in range(max_n + 1)]


def polynomial_identity_check(r):
    """True iff the specialized formula for ``r`` matches eval_general at n = 0..40.

    Both sides are polynomials in n of degree (r-1)r/2 <= 21, so agreement at
    41 points is a proof of identity.
    """
    if r not in SPECIALIZED:
        raise ValueError(f"no specialized formula for r={r}; expected one of {SPECIALIZED_SHIFTS}")
    special = SPECIALIZED[r]
    return all(special(n) == eval_general(n, r) for n in range(IDENTITY_SAMPLES))
