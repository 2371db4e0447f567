"""Classical (Torgerson) MDS and orthogonal Procrustes alignment."""

from dataclasses import dataclass

import numpy as np

from msdist.errors import InvalidInputError

SYMMETRY_TOL = 1e-9


@dataclass(frozen=True)
class Embedding:
    coords: np.ndarray
    eigenvalues: np.ndarray  # full spectrum, descending, unclamped
    stress: float

    @property
    def n(self):
        return self.coords.shape[0]

    @property
    def dim(self):
        return self.coords.shape[1]


def validate_distance_matrix(D):
    D = np.asarray(D, dtype=np.float64)
    if D.ndim != 2 or D.shape[0] != D.shape[1]:
        raise InvalidInputError(f"distance matrix must be square, got shape {D.shape}")
    if not np.all(np.isfinite(D)):
        raise InvalidInputError("distance matrix contains NaN or infinite entries")
    if np.any(D < 0):
        raise InvalidInputError("distance matrix has negative entries")
    if np.any(np.diag(D) != 0):
        raise InvalidInputError("distance matrix diagonal must be zero")
    if not np.allclose(D, D.T, rtol=0, atol=SYMMETRY_TOL):
        raise InvalidInputError("distance matrix is not symmetric")
    return D


def pairwise_euclidean(X):
    X = np.asarray(X, dtype=np.float64)
    diff = X[:, None, :] - X[None, :, :]
    return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))


def _fix_signs(V):
    for k in range(V.shape[1]):
        nz = np.flatnonzero(V[:, k])
        if nz.size and V[nz[0], k] < 0:
            V[:, k] = -V[:, k]
    return V


def classical_mds(D, m=2):
    """Embed ``D`` into ``R^m`` through the double-centred squared-distance Gram matrix.

    Negative eigenvalues (non-Euclidean input) are clamped to zero for the
    coordinates but returned unchanged in ``eigenvalues``.
    """
    D = validate_distance_matrix(D)
    n = D.shape[0]
    if not 1 <= m <= n:
        raise InvalidInputError(f"target dimension must satisfy 1 <= m <= n = {n}, got {m}")
    D = (D + D.T) / 2
    J = np.eye(n) - 1.0 / n
    B = -0.5 * J @ (D * D) @ J
    B = (B + B.T) / 2
    w, V = np.linalg.eigh(B)
    order = np.argsort(w)[::-1]
    w, V = w[order], _fix_signs(V[:, order])
    coords = V[:, :m] * np.sqrt(np.maximum(w[:m], 0.0))
    coords -= coords.mean(axis=0)
    denom = float(np.sum(D * D))
    if denom == 0:
        stress = 0.0
    else:
        stress = float(np.sum((pairwise_euclidean(coords) - D) ** 2) / denom)
    return Embedding(coords, w, stress)


def _coords(E):
    return E.coords if isinstance(E, Embedding) else np.asarray(E, dtype=np.float64)


def procrustes_align(A, B):
    """Rotate/reflect centred ``B`` onto centred ``A``; returns ``(aligned, residual)``.

    No scaling is applied, so distances within ``B`` are preserved.  The
    residual is the Frobenius norm ``||A - B Q||`` after centring.
    """
    A, B = _coords(A), _coords(B)
    if A.shape != B.shape or A.ndim != 2:
        raise InvalidInputError(f"embeddings must have the same shape, got {A.shape} and {B.shape}")
    A0 = A - A.mean(axis=0)
    B0 = B - B.mean(axis=0)
    U, _, Vt = np.linalg.svd(B0.T @ A0)
    aligned = B0 @ (U @ Vt)
    return aligned, float(np.linalg.norm(A0 - aligned))
