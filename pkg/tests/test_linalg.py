from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mapoly import linalg

small = st.integers(min_value=-4, max_value=4)
square3 = st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3)


def test_det_known_values():
    assert linalg.det([[2, 0], [0, 3]]) == 6
    assert linalg.det([[0, 1], [1, 0]]) == -1
    assert linalg.det([[1, 2], [2, 4]]) == 0
    assert linalg.det([]) == 1


def test_rref_and_rank():
    rows, pivots = linalg.rref([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert pivots == [0, 1]
    assert linalg.rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 2
    assert linalg.rank([]) == 0


def test_solve_singular_returns_none():
    assert linalg.solve([[1, 1], [2, 2]], [1, 2]) is None
    assert linalg.solve([[2, 1], [1, 1]], [3, 2]) == [1, 1]


def test_nullspace():
    basis = linalg.nullspace([[1, 1, 0]])
    assert len(basis) == 2
    for v in basis:
        assert linalg.dot([1, 1, 0], v) == 0
    assert len(linalg.nullspace([], 3)) == 3


def test_primitive():
    ints, factor = linalg.primitive([Fraction(1, 2), Fraction(-3, 4)])
    assert ints == [2, -3]
    assert factor == 4
    with pytest.raises(ValueError):
        linalg.primitive([0, 0])


def test_affine_rank():
    assert linalg.affine_rank([]) == -1
    assert linalg.affine_rank([(1, 1)]) == 0
    assert linalg.affine_rank([(0, 0), (1, 1), (2, 2)]) == 1
    assert linalg.affine_rank([(0, 0), (1, 0), (0, 1)]) == 2


@settings(max_examples=1000, deadline=None)
@given(square3)
def test_inverse_times_matrix_is_identity(matrix):
    inverse = linalg.inverse(matrix)
    if linalg.det(matrix) == 0:
        assert inverse is None
    else:
        assert linalg.matmul(inverse, matrix) == [[int(i == j) for j in range(3)] for i in range(3)]


@settings(max_examples=1000, deadline=None)
@given(square3, square3)
def test_det_is_multiplicative(a, b):
    assert linalg.det(linalg.matmul(a, b)) == linalg.det(a) * linalg.det(b)


def test_row_reduce_tracks_row_operations():
    matrix = [[1, 1], [1, 1], [0, 2]]
    rows, transform, pivots = linalg.row_reduce(matrix)
    assert rows == [[1, 0], [0, 1], [0, 0]]
    assert pivots == [0, 1]
    assert linalg.matmul(transform, matrix) == rows
    # last row of the transform is a dependency among the input rows
    assert linalg.matvec([list(c) for c in zip(*matrix)], transform[2]) == [0, 0]


@settings(max_examples=1000, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=5))
def test_row_reduce_matches_rref(matrix):
    rows, transform, pivots = linalg.row_reduce(matrix)
    expected, expected_pivots = linalg.rref(matrix)
    assert rows == expected
    assert pivots == expected_pivots
    assert linalg.matmul(transform, matrix) == rows
    assert linalg.det(transform) != 0
