from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.quiver import linalg


def test_rank_and_nullspace():
    m = linalg.matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert linalg.rank(m) == 2
    kernel = linalg.nullspace(m)
    assert len(kernel) == 1
    for v in kernel:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m.tolist())


def test_matrix_shape_checks():
    with pytest.raises(ValueError):
        linalg.matrix([[1, 2], [3]], shape=(2, 2))
    empty = linalg.matrix([], shape=(0, 3))
    assert empty.shape == (0, 3)


def test_matmul_rejects_bad_shapes():
    with pytest.raises(ValueError):
        linalg.matmul(linalg.identity(2), linalg.identity(3))


def test_matmul_exact_fractions():
    a = linalg.matrix([["1/2", 0], [0, 3]])
    b = linalg.matrix([[2, 0], [0, "1/3"]])
    assert linalg.is_zero(linalg.matmul(a, b) - linalg.identity(2))


def test_integer_row_is_primitive():
    assert linalg.integer_row([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
    assert linalg.integer_row([4, 6, 0]) == [2, 3, 0]


def test_rref_pivots():
    rows, pivots = linalg.rref([[0, 2, 4], [1, 1, 1]])
    assert pivots == [0, 1]
    assert rows[1] == [0, 1, 2]


def test_column_space_dimension():
    m = linalg.matrix([[1, 2], [2, 4]])
    assert linalg.column_space(m).shape == (2, 1)


def test_block_system_commutant():
    a = linalg.matrix([[1, 0], [0, 2]])
    system = linalg.BlockSystem()
    system.add_unknown("X", 2, 2)
    system.add_equation([(Fraction(1), a, "X", None), (Fraction(-1), None, "X", a)], shape=(2, 2))
    assert system.solution_dim() == 2
    for v in system.nullspace():
        x = system.split(v)["X"]
        assert linalg.is_zero(linalg.matmul(a, x) - linalg.matmul(x, a))


def test_block_system_rejects_mismatched_term():
    system = linalg.BlockSystem()
    system.add_unknown("X", 2, 2)
    with pytest.raises(ValueError):
        system.add_equation([(Fraction(1), linalg.identity(3), "X", None)], shape=(2, 2))


def test_to_mod_p():
    m = linalg.matrix([["1/2", 4]])
    assert linalg.to_mod_p(m, 3) == [[2, 1]]
    with pytest.raises(ValueError):
        linalg.to_mod_p(linalg.matrix([["1/3"]]), 3)


@given(p=st.sampled_from([2, 3, 5, 7]), k=st.integers(min_value=1, max_value=3))
def test_projective_points_count(p, k):
    basis = [[1 if i == j else 0 for j in range(k + 1)] for i in range(k)]
    points = list(linalg.projective_points(basis, p))
    assert len(points) == (p ** k - 1) // (p - 1)
    assert len({tuple(x) for x in points}) == len(points)


@given(rows=st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4))
def test_kernel_mod_p_dimension_matches_rank(rows):
    p = 101
    kernel = linalg.kernel_mod_p(rows, 4, p)
    for v in kernel:
        assert all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in rows)
    # nonzero minors of size <= 2 stay below p in absolute value
    if linalg.rank(rows) <= 2:
        assert len(kernel) == 4 - linalg.rank(rows)
