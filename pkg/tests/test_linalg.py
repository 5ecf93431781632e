"""Hermitian eigensolver tests against the numpy oracle."""

import numpy as np
import pytest

from kuniform import ParameterViolation, ShapeMismatch, jacobi_eigvalsh, rank_by_eigenvalues


def random_hermitian(n, rng):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 13, 16])
def test_agrees_with_numpy_on_random_hermitian(n):
    rng = np.random.default_rng(1000 + n)
    for _ in range(5):
        a = random_hermitian(n, rng)
        got = jacobi_eigvalsh(a)
        want = np.linalg.eigvalsh(a)
        assert np.max(np.abs(got - want)) < 1e-10


def test_agrees_with_numpy_on_real_symmetric():
    rng = np.random.default_rng(7)
    a = rng.normal(size=(12, 12))
    a = (a + a.T) / 2
    got = jacobi_eigvalsh(a)
    want = np.linalg.eigvalsh(a)
    assert np.max(np.abs(got - want)) < 1e-10


def test_large_matrix():
    rng = np.random.default_rng(64)
    a = random_hermitian(64, rng)
    got = jacobi_eigvalsh(a)
    want = np.linalg.eigvalsh(a)
    assert np.max(np.abs(got - want)) < 1e-9


def test_diagonal_matrix_is_returned_sorted():
    got = jacobi_eigvalsh(np.diag([3.0, -1.0, 2.0]))
    assert np.allclose(got, [-1.0, 2.0, 3.0], atol=1e-14)


def test_known_two_by_two():
    a = np.array([[0.5, 0.5], [0.5, 0.5]])
    assert np.allclose(jacobi_eigvalsh(a), [0.0, 1.0], atol=1e-12)


def test_block_pattern_spectrum():
    quarter = 0.25
    a = np.array([
        [quarter, 0, 0, quarter],
        [0, quarter, quarter, 0],
        [0, quarter, quarter, 0],
        [quarter, 0, 0, quarter],
    ])
    assert np.allclose(jacobi_eigvalsh(a), [0, 0, 0.5, 0.5], atol=1e-12)


def test_rejects_non_square():
    with pytest.raises(ShapeMismatch):
        jacobi_eigvalsh(np.zeros((2, 3)))


def test_rejects_non_hermitian():
    with pytest.raises(ParameterViolation):
        jacobi_eigvalsh(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_rank_by_eigenvalues():
    assert rank_by_eigenvalues(np.eye(4) / 4) == 4
    assert rank_by_eigenvalues(np.diag([0.5, 0.5, 0.0, 0.0])) == 2
    proj = np.zeros((3, 3))
    proj[0, 0] = 1.0
    assert rank_by_eigenvalues(proj) == 1
