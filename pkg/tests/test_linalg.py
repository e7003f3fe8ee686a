"""Exact linear algebra against hand-computed oracles."""

from fractions import Fraction

import pytest

from postlie import linalg

F = Fraction


def test_frac_accepts_ints_strings_fractions():
    assert linalg.frac(3) == F(3)
    assert linalg.frac("1/2") == F(1, 2)
    assert linalg.frac(F(-5, 3)) == F(-5, 3)


def test_rref_hand_example():
    # [[1,2],[3,4]] reduces to the identity; pivots in both columns.
    m = linalg.mat([[1, 2], [3, 4]])
    reduced, pivots = linalg.rref(m)
    assert reduced == linalg.identity(2)
    assert pivots == (0, 1)


def test_rref_with_free_column():
    # second column is twice the first
    m = linalg.mat([[1, 2, 1], [2, 4, 0]])
    reduced, pivots = linalg.rref(m)
    assert pivots == (0, 2)
    assert reduced == linalg.mat([[1, 2, 0], [0, 0, 1]])


def test_rank_and_nullspace_dimensions():
    m = linalg.mat([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    assert linalg.rank(m) == 2
    null = linalg.nullspace(m)
    assert len(null) == 1
    for row in null:
        assert linalg.is_zero_vector(linalg.matvec(m, row))


def test_nullspace_of_full_rank_matrix_is_empty():
    assert linalg.nullspace(linalg.mat([[2, 1], [1, 1]])) == ()


def test_solve_unique_system():
    # x + y = 3, x - y = 1  =>  x = 2, y = 1
    m = linalg.mat([[1, 1], [1, -1]])
    assert linalg.solve(m, linalg.vec([3, 1])) == (F(2), F(1))


def test_solve_inconsistent_returns_none():
    m = linalg.mat([[1, 1], [2, 2]])
    assert linalg.solve(m, linalg.vec([1, 3])) is None


def test_solve_affine_particular_plus_nullspace():
    m = linalg.mat([[1, 1, 0]])
    result = linalg.solve_affine(m, linalg.vec([2]))
    assert result is not None
    particular, basis = result
    assert linalg.matvec(m, particular) == (F(2),)
    assert len(basis) == 2
    for row in basis:
        assert linalg.matvec(m, row) == (F(0),)


def test_solve_affine_inconsistent_returns_none():
    m = linalg.mat([[1, 1], [1, 1]])
    assert linalg.solve_affine(m, linalg.vec([0, 1])) is None


def test_det_and_inverse_exact():
    m = linalg.mat([[2, 1], [7, 4]])  # det 1
    assert linalg.det(m) == F(1)
    inv = linalg.inverse(m)
    assert inv == linalg.mat([[4, -1], [-7, 2]])
    assert linalg.matmul(m, inv) == linalg.identity(2)


def test_det_three_by_three_rule_of_sarrus():
    m = linalg.mat([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    # 1*(50-48) - 2*(40-42) + 3*(32-35) = 2 + 4 - 9 = -3
    assert linalg.det(m) == F(-3)


def test_inverse_of_singular_matrix_raises():
    with pytest.raises(ValueError):
        linalg.inverse(linalg.mat([[1, 2], [2, 4]]))


def test_matmul_matvec_transpose_consistency():
    a = linalg.mat([[1, 2], [3, 4]])
    b = linalg.mat([[0, 1], [1, 0]])
    assert linalg.matmul(a, b) == linalg.mat([[2, 1], [4, 3]])
    assert linalg.matvec(a, linalg.vec([1, 1])) == (F(3), F(7))
    assert linalg.transpose(a) == linalg.mat([[1, 3], [2, 4]])


def test_commutator_and_trace():
    a = linalg.mat([[0, 1], [0, 0]])
    b = linalg.mat([[0, 0], [1, 0]])
    assert linalg.commutator(a, b) == linalg.mat([[1, 0], [0, -1]])
    assert linalg.trace(linalg.mat([[5, 1], [2, -3]])) == F(2)


def test_row_basis_removes_dependent_rows():
    m = linalg.mat([[1, 0], [2, 0], [0, 1]])
    basis = linalg.row_basis(m)
    assert len(basis) == 2
    assert linalg.rank(basis) == 2


def test_stack_and_hstack_shapes():
    a = linalg.mat([[1, 2]])
    b = linalg.mat([[3, 4]])
    assert linalg.stack([a, b]) == linalg.mat([[1, 2], [3, 4]])
    assert linalg.hstack(a, b) == linalg.mat([[1, 2, 3, 4]])
