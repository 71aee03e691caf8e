import random
from fractions import Fraction

import numpy as np
import pytest
from sympy import Matrix

from adereduce import (
    AdeError,
    RatMatrix,
    char_poly,
    coxeter_element,
    cyclotomic_multiplicities,
    determinant,
    evaluate_at_matrix,
    kernel_basis,
    matrix_order,
    root_system,
    rref,
)
from adereduce._linalg import integer_kernel, solve_in_basis

from .conftest import SMALL_TYPES

# The Coxeter element of A2 on simple root coordinates
COXETER_A2 = np.array([[-1, -1], [1, 0]], dtype=np.int64)


def test_rat_matrix_rejects_ragged_rows() -> None:
    with pytest.raises(AdeError) as cm:
        RatMatrix.from_rows([[1, 2], [3]])
    assert "RatMatrix: rows must all have 2 entries" == str(cm.value)


def test_rat_matrix_rank_and_apply() -> None:
    m = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, Fraction(1, 2)]])
    assert 2 == m.rank
    assert (Fraction(6), Fraction(12), Fraction(3, 2)) == m.apply([1, 1, 1])


def test_rref_clears_above_pivots() -> None:
    reduced = rref(RatMatrix.from_rows([[1, 2], [3, 4]]))
    assert ((1, 0), (0, 1)) == reduced.entries


def test_kernel_basis_is_in_kernel() -> None:
    m = RatMatrix.from_rows([[1, 1, 1], [1, -1, 0]])
    basis = kernel_basis(m)
    assert 1 == len(basis)
    assert (0, 0) == m.apply(basis[0])


def test_solve_in_basis() -> None:
    solutions = solve_in_basis([[1, 0, 1], [0, 1, 1]], [[2, 3, 5]])
    assert [(Fraction(2), Fraction(3))] == solutions
    with pytest.raises(AdeError):
        solve_in_basis([[1, 0, 1], [0, 1, 1]], [[1, 1, 0]])


def test_integer_kernel_columns_are_primitive() -> None:
    kernel = integer_kernel(np.array([[2, 4, 6]], dtype=np.int64))
    assert (3, 2) == kernel.shape
    assert not (np.array([[2, 4, 6]]) @ kernel).any()
    for column in kernel.T:
        assert 1 == np.gcd.reduce(np.abs(column))


def test_char_poly_and_cayley_hamilton() -> None:
    p = char_poly(COXETER_A2)
    assert [1, 1, 1] == p
    assert not evaluate_at_matrix(p, COXETER_A2).any()


def test_char_poly_needs_square_matrix() -> None:
    with pytest.raises(AdeError):
        char_poly(np.zeros((2, 3), dtype=np.int64))


def test_determinant() -> None:
    assert 1 == determinant(COXETER_A2)
    assert -2 == determinant(np.array([[1, 2], [3, 4]]))
    assert 1 == determinant(np.zeros((0, 0), dtype=np.int64))


def test_matrix_order() -> None:
    assert 3 == matrix_order(COXETER_A2)
    assert 1 == matrix_order(np.eye(4, dtype=np.int64))
    with pytest.raises(AdeError):
        matrix_order(np.array([[2]]), limit=5)


def test_cyclotomic_multiplicities() -> None:
    # (λ - 1)(λ + 1)(λ² + 1) = λ⁴ - 1
    assert {1: 1, 2: 1, 4: 2} == cyclotomic_multiplicities([1, 0, 0, 0, -1], 4)


def test_cyclotomic_multiplicities_rejects_other_roots() -> None:
    with pytest.raises(AdeError):
        cyclotomic_multiplicities([1, -3], 1)


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_cayley_hamilton_for_coxeter_elements(label: str) -> None:
    c = coxeter_element(root_system(label)).matrix
    p = char_poly(c)
    assert 1 + c.shape[0] == len(p)
    assert not evaluate_at_matrix(p, c).any()


def test_kernel_of_the_e6_positive_roots(e6) -> None:
    roots = RatMatrix.from_rows(e6.positive_roots)
    assert (36, 6) == (roots.rows, roots.cols)
    assert [] == kernel_basis(roots)
    transposed = RatMatrix.from_rows(e6.positive_roots.T)
    basis = kernel_basis(transposed)
    assert 30 == len(basis)
    for vector in basis:
        assert not any(transposed.apply(vector))


@pytest.mark.parametrize("seed", range(10))
def test_rank_matches_an_independent_elimination(seed: int) -> None:
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    # Low rank products make dependent rows common
    inner = rng.randint(1, 3)
    left = [[rng.randint(-3, 3) for _ in range(inner)] for _ in range(rows)]
    right = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(inner)]
    entries = (np.array(left) @ np.array(right)).tolist()
    m = RatMatrix.from_rows(entries)
    reduced = rref(m)
    nonzero = sum(1 for row in reduced.entries if any(row))
    assert Matrix(entries).rank() == nonzero == m.rank
