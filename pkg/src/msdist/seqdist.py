"""Distances between sequences: edit and DTW families, plus LCS/LSP path distances.

Each distance is a dynamic program over the matrix of ground distances.
Pass ``light=True`` to keep only two rows of the DP table; results are bit
identical to the full-table variant.
"""

import numpy as np

from msdist import kernels
from msdist.errors import ConfigurationError, EmptyObservationError
from msdist.ground import encode_path


def _ground_matrix(xs, ys, ground):
    if not xs or not ys:
        return np.zeros((len(xs), len(ys)))
    return np.ascontiguousarray(ground.matrix(xs, ys), dtype=np.float64)


def _check_rho(rho):
    if not rho > 0:
        raise ConfigurationError(f"rho must be positive, got {rho!r}")


def _require_nonempty(xs, ys):
    if not xs or not ys:
        raise EmptyObservationError("a warping coupling needs two non-empty sequences")


def edit_distance(X, Y, ground, *, light=False):
    """Cheapest monotone matching, unmatched entries priced at ``d(x, null)``."""
    if not ground.has_null:
        raise ConfigurationError(f"ground metric {ground.name!r} has no null element")
    xs, ys = list(X), list(Y)
    D = _ground_matrix(xs, ys, ground)
    dx = ground.null_costs(xs) if xs else np.zeros(0)
    dy = ground.null_costs(ys) if ys else np.zeros(0)
    fn = kernels.edit_light if light else kernels.edit_full
    return fn(D, dx, dy)


def fixed_penalty_edit_distance(X, Y, ground, rho, *, light=False):
    """Cheapest monotone matching, each unmatched entry priced at ``rho``."""
    _check_rho(rho)
    xs, ys = list(X), list(Y)
    D = _ground_matrix(xs, ys, ground)
    fn = kernels.fp_edit_light if light else kernels.fp_edit_full
    return fn(D, float(rho))


def dtw_distance(X, Y, ground, *, light=False):
    """Cheapest warping coupling.  Not a metric: see the audit module."""
    xs, ys = list(X), list(Y)
    _require_nonempty(xs, ys)
    D = _ground_matrix(xs, ys, ground)
    fn = kernels.dtw_light if light else kernels.dtw_full
    return fn(D)


def fixed_penalty_dtw_distance(X, Y, ground, rho, *, light=False):
    """Cheapest warping coupling plus ``rho`` per warping step."""
    _check_rho(rho)
    xs, ys = list(X), list(Y)
    _require_nonempty(xs, ys)
    D = _ground_matrix(xs, ys, ground)
    fn = kernels.fp_dtw_light if light else kernels.fp_dtw_full
    return fn(D, float(rho))


def lcs_distance(x, y, *, light=False):
    """``len(x) + len(y) - 2 * (longest common subsequence length)``."""
    fn = kernels.lcs_light if light else kernels.lcs_full
    return int(fn(encode_path(x), encode_path(y)))


def lsp_distance(x, y, *, light=False):
    """``len(x) + len(y) - 2 * (longest common contiguous subpath length)``."""
    fn = kernels.lsp_light if light else kernels.lsp_full
    return int(fn(encode_path(x), encode_path(y)))


# -- relation objects --------------------------------------------------------

def is_monotone_matching(pairs):
    """True when pairs use each index once and never cross."""
    pairs = sorted(pairs)
    for (i1, j1), (i2, j2) in zip(pairs, pairs[1:]):
        if not (i1 < i2 and j1 < j2):
            return False
    return True


def is_coupling(steps, n, m):
    if not steps or steps[0] != (0, 0) or steps[-1] != (n - 1, m - 1):
        return False
    for (i, j), (k, l) in zip(steps, steps[1:]):
        if (k - i, l - j) not in ((0, 1), (1, 0), (1, 1)):
            return False
    return True


def warp_count(steps):
    """Number of coupled pairs ``(i, j)`` also coupled with ``(i, j+1)`` or ``(i+1, j)``."""
    present = set(steps)
    return sum(1 for i, j in present if (i, j + 1) in present or (i + 1, j) in present)
