import random

import pytest
from hypothesis import given, settings, strategies as st

from catalan_hankel.errors import DimensionCapExceeded, NotSquare
from catalan_hankel.exact_linalg import (
    ExactMatrix,
    _matmul,
    det,
    det_bareiss,
    det_laplace,
)
from oracles import det_fraction, det_leibniz

CATALAN_3 = [[2, 5, 14], [5, 14, 42], [14, 42, 132]]


def square_matrices(max_dim=6, lo=-9, hi=9):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.lists(st.integers(lo, hi), min_size=n * n, max_size=n * n).map(
            lambda xs: ExactMatrix(n, n, tuple(xs))
        )
    )


def test_from_function_layout():
    m = ExactMatrix.from_function(2, 3, lambda i, j: 10 * i + j)
    assert m.entries == (0, 1, 2, 10, 11, 12)
    assert m[1, 2] == 12
    assert m.to_rows() == [[0, 1, 2], [10, 11, 12]]
    assert m.transpose().to_rows() == [[0, 10], [1, 11], [2, 12]]


def test_entry_count_checked():
    with pytest.raises(ValueError):
        ExactMatrix(2, 2, (1, 2, 3))


def test_matrix_is_immutable():
    m = ExactMatrix.identity(2)
    with pytest.raises(AttributeError):
        m.rows = 3


@pytest.mark.parametrize("rows, expected", [
    ([], 1),
    ([[2, 5], [5, 14]], 3),
    (CATALAN_3, 4),
])
def test_laplace_examples(rows, expected):
    m = ExactMatrix.from_rows(rows)
    assert det_laplace(m) == expected
    assert det_leibniz(rows) == expected


@pytest.mark.parametrize("rows, expected", [
    (ExactMatrix.identity(3).to_rows(), 1),
    (CATALAN_3, 4),
    ([[0, 1], [1, 0]], -1),
    ([[0, 0], [1, 2]], 0),
    ([[1, 2], [2, 4]], 0),
])
def test_bareiss_examples(rows, expected):
    assert det_bareiss(ExactMatrix.from_rows(rows)) == expected


def test_zero_by_zero():
    empty = ExactMatrix(0, 0, ())
    assert det_bareiss(empty) == det_laplace(empty) == det(empty) == 1


def test_singular_column_returns_zero():
    m = ExactMatrix.from_rows([[1, 0, 2], [3, 0, 4], [5, 0, 6]])
    assert det_bareiss(m) == 0


def test_dispatch_examples():
    assert det(ExactMatrix.from_rows([[14]])) == 14
    assert det(ExactMatrix.from_rows([[1, 3], [1, 6]])) == 3
    nine = ExactMatrix.identity(9)
    with pytest.raises(DimensionCapExceeded):
        det(nine, "laplace")
    assert det(nine) == 1
    with pytest.raises(ValueError):
        det(nine, "lu")


def test_not_square():
    m = ExactMatrix(2, 3, (1, 2, 3, 4, 5, 6))
    for fn in (det_laplace, det_bareiss, det):
        with pytest.raises(NotSquare):
            fn(m)


@settings(max_examples=300)
@given(square_matrices())
def test_bareiss_matches_oracles(m):
    d = det_bareiss(m)
    assert d == det_laplace(m)
    assert d == det_fraction(m.to_rows())


@given(square_matrices(max_dim=5, lo=-3, hi=3))
def test_sparse_zero_pivots(m):
    # narrow range produces many zero pivots and row swaps
    assert det_bareiss(m) == det_fraction(m.to_rows())


@given(square_matrices())
def test_transpose_invariance(m):
    assert det_bareiss(m) == det_bareiss(m.transpose())
    assert det_laplace(m) == det_laplace(m.transpose())


def test_multiplicativity():
    rng = random.Random(20261018)
    for _ in range(100):
        a = ExactMatrix.from_function(3, 3, lambda i, j: rng.randint(-5, 5))
        b = ExactMatrix.from_function(3, 3, lambda i, j: rng.randint(-5, 5))
        assert det(_matmul(a, b)) == det(a) * det(b)
        assert det_bareiss(_matmul(a, b)) == det_bareiss(a) * det_bareiss(b)


def test_laplace_leibniz_agree_up_to_cap():
    rng = random.Random(7)
    for n in range(1, 8):
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert det_laplace(ExactMatrix.from_rows(rows)) == det_leibniz(rows)


def test_bareiss_large_exact():
    rng = random.Random(3)
    rows = [[rng.randint(-10**20, 10**20) for _ in range(25)] for _ in range(25)]
    assert det_bareiss(ExactMatrix.from_rows(rows)) == det_fraction(rows)
