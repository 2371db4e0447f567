import numpy as np
import pytest

from msdist.embed import classical_mds, pairwise_euclidean, procrustes_align
from msdist.errors import InvalidInputError


def test_collinear():
    x = np.array([[0.0], [1.0], [3.0]])
    D = pairwise_euclidean(x)
    e = classical_mds(D, 1)
    assert np.abs(pairwise_euclidean(e.coords) - D).max() <= 1e-9
    assert np.allclose(e.coords.mean(axis=0), 0)
    assert e.stress < 1e-20


def test_zero_and_equilateral():
    assert np.all(classical_mds(np.zeros((4, 4)), 2).coords == 0)
    D = 1 - np.eye(3)
    e = classical_mds(D, 2)
    assert np.abs(pairwise_euclidean(e.coords) - D).max() <= 1e-9


def test_negative_eigenvalues_reported_raw():
    # violates the triangle inequality, so it cannot be Euclidean
    D = np.array([[0, 1, 3], [1, 0, 1], [3, 1, 0]], dtype=float)
    e = classical_mds(D, 3)
    assert e.eigenvalues.min() < 0
    assert np.all(np.isfinite(e.coords))
    assert list(e.eigenvalues) == sorted(e.eigenvalues, reverse=True)


def test_sign_convention_deterministic():
    rng = np.random.default_rng(1)
    D = pairwise_euclidean(rng.random((8, 2)))
    a, b = classical_mds(D), classical_mds(D.copy())
    assert np.array_equal(a.coords, b.coords)


@pytest.mark.parametrize(
    "D",
    [np.array([[0, 1], [2, 0]]), np.array([[0, np.nan], [np.nan, 0]]), np.array([[1, 1], [1, 1]]),
     np.array([[0, -1], [-1, 0]]), np.zeros((2, 3))],
)
def test_invalid(D):
    with pytest.raises(InvalidInputError):
        classical_mds(D, 1)


def test_dimension_bounds():
    with pytest.raises(InvalidInputError):
        classical_mds(np.zeros((2, 2)), 3)
    with pytest.raises(InvalidInputError):
        classical_mds(np.zeros((2, 2)), 0)


def test_procrustes():
    rng = np.random.default_rng(4)
    A = rng.normal(size=(20, 2))
    A -= A.mean(axis=0)
    t = 0.5 * np.pi
    R = np.array([[np.cos(t), -np.sin(t)], [np.sin(t), np.cos(t)]])
    assert procrustes_align(A, A @ R)[1] <= 1e-9
    assert procrustes_align(A, A * np.array([1, -1]))[1] <= 1e-9
    B = A + rng.normal(scale=0.01, size=A.shape)
    aligned, res = procrustes_align(A, B)
    assert res <= np.linalg.norm(A - (B - B.mean(axis=0)))
    assert np.abs(pairwise_euclidean(aligned) - pairwise_euclidean(B)).max() <= 1e-12
    with pytest.raises(InvalidInputError):
        procrustes_align(A, A[:5])
