"""Exact integer determinants: a cofactor oracle and fraction-free Bareiss."""

from dataclasses import dataclass

from .errors import DimensionCapExceeded, InternalExactDivisionViolation, NotSquare

LAPLACE_MAX_DIM = 8
AUTO_LAPLACE_MAX_DIM = 4
METHODS = ("auto", "laplace", "bareiss")


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable dense integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_function(cls, rows, cols, f):
        return cls(rows, cols, tuple(f(i, j) for i in range(rows) for j in range(cols)))

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n):
        return cls.from_function(n, n, lambda i, j: int(i == j))

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self):
        return ExactMatrix.from_function(self.cols, self.rows, lambda i, j: self[j, i])

    def __repr__(self):
        return f"ExactMatrix({self.to_rows()!r})"


def _require_square(m):
    if not m.is_square:
        raise NotSquare(f"determinant needs a square matrix, got {m.rows}x{m.cols}")


def _matmul(a, b):
    if a.cols != b.rows:
        raise ValueError("inner dimensions differ")
    return ExactMatrix.from_function(
        a.rows, b.cols, lambda i, j: sum(a[i, k] * b[k, j] for k in range(a.cols))
    )


def _laplace(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _laplace(minor)
        total += -term if j % 2 else term
    return total


def det_laplace(m):
    """Cofactor expansion along the first row. Exponential; capped at 8x8."""
    _require_square(m)
    if m.rows > LAPLACE_MAX_DIM:
        raise DimensionCapExceeded(
            f"Laplace expansion is limited to {LAPLACE_MAX_DIM}x{LAPLACE_MAX_DIM}, got {m.rows}x{m.rows}"
        )
    return _laplace(m.to_rows())


def det_bareiss(m):
    """Fraction-free single-step Bareiss elimination.

    After step k every entry below and right of the pivot is a (k+1)-order
    minor of the input, so the division by the previous pivot is exact. The
    remainder is checked on every division anyway.
    """
    _require_square(m)
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                q, rem = divmod(pivot * row_i[j] - lead * row_k[j], prev)
                if rem:
                    raise InternalExactDivisionViolation(
                        f"Bareiss step {k}: remainder {rem} at ({i}, {j})"
                    )
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det(m, method="auto"):
    if method == "auto":
        _require_square(m)
        method = "laplace" if m.rows <= AUTO_LAPLACE_MAX_DIM else "bareiss"
    if method == "laplace":
        return det_laplace(m)
    if method == "bareiss":
        return det_bareiss(m)
    raise ValueError(f"unknown determinant method {method!r}; choose from {METHODS}")
