"""Minimum-cost assignment and the two cost-matrix reductions for matchings."""

from dataclasses import dataclass

import numpy as np

from msdist import kernels
from msdist.errors import ConfigurationError, InvalidInputError


@dataclass(frozen=True)
class AssignmentResult:
    """``permutation[i]`` is the (0-based) column assigned to row ``i``."""

    permutation: tuple
    total_cost: float


def _as_cost_matrix(C):
    C = np.ascontiguousarray(C, dtype=np.float64)
    if C.ndim != 2 or C.shape[0] != C.shape[1]:
        raise InvalidInputError(f"cost matrix must be square, got shape {C.shape}")
    if not np.all(np.isfinite(C)):
        raise InvalidInputError("cost matrix has NaN or infinite entries")
    if np.any(C < 0):
        raise InvalidInputError("cost matrix has negative entries")
    return C


def assignment_cost(C, permutation):
    """Sum of ``C[i, permutation[i]]`` in row order."""
    total = 0.0
    for i, j in enumerate(permutation):
        total += float(C[i, j])
    return total


def solve_assignment(C):
    """Solve the square assignment problem exactly in O(n^3).

    Ties are broken by the solver's fixed scan order, so a given matrix always
    yields the same permutation.
    """
    C = _as_cost_matrix(C)
    sigma = tuple(kernels.hungarian(C))
    return AssignmentResult(sigma, assignment_cost(C, sigma))


def _penalties(penalty, elems):
    if penalty is None:
        raise ConfigurationError("no unmatched-element penalty: supply a null element or rho")
    if callable(penalty):
        return np.array([float(penalty(e)) for e in elems], dtype=np.float64)
    return np.full(len(elems), float(penalty), dtype=np.float64)


def build_cost_matrix_complete(xs, ys, ground, penalty, *, pairwise=None):
    """Cost matrix whose optimal permutations are optimal complete matchings.

    ``penalty`` is either a callable ``lambda(element)`` or a constant.  The
    smaller side indexes the first rows; the remaining rows are dummy rows
    holding the penalty of the column element.  Returns ``(C, swapped)`` where
    ``swapped`` tells whether rows came from ``ys`` rather than ``xs``.
    ``pairwise`` may supply the ``len(xs) x len(ys)`` ground distances if
    already computed.
    """
    if pairwise is None and len(xs) and len(ys):
        pairwise = ground.matrix(xs, ys)
    swapped = len(xs) > len(ys)
    if swapped:
        xs, ys = ys, xs
        if pairwise is not None:
            pairwise = pairwise.T
    n, m = len(xs), len(ys)
    lam = _penalties(penalty, ys)
    C = np.empty((m, m), dtype=np.float64)
    if n:
        C[:n] = pairwise
    C[n:] = lam[None, :]
    return C, swapped


def build_cost_matrix_all(xs, ys, ground, penalty, *, pairwise=None):
    """Cost matrix whose optimal permutations are optimal matchings of any size.

    Block layout for ``n = len(xs)``, ``m = len(ys)``::

        [ d(x_i, y_j)   lambda(x_i) ]   n rows
        [ lambda(y_j)   0           ]   m rows
    """
    n, m = len(xs), len(ys)
    lam_y = _penalties(penalty, ys)
    lam_x = _penalties(penalty, xs)
    C = np.zeros((n + m, n + m), dtype=np.float64)
    if n and m:
        C[:n, :m] = ground.matrix(xs, ys) if pairwise is None else pairwise
    C[:n, m:] = lam_x[:, None]
    C[n:, :m] = lam_y[None, :]
    return C
