"""Brute-force reference implementations for verification.

Everything here enumerates relations explicitly and evaluates ground
distances one call at a time; nothing is shared with the fast paths beyond
the ground metric itself.  Size guards keep the enumerations from exploding.
"""

import itertools
import math

from msdist.errors import OracleScaleError
from msdist.multiset import Multiset
from msdist.setdist import Matching

MAX_MATCHING_PRODUCT = 20
MAX_COUPLING_SPAN = 12


def _elements(X):
    return X.elements() if isinstance(X, Multiset) else list(X)


def _size(X):
    return X if isinstance(X, int) else len(X)


def _guard_matchings(n, m):
    if n * m > MAX_MATCHING_PRODUCT:
        raise OracleScaleError(f"|X|*|Y| = {n * m} exceeds {MAX_MATCHING_PRODUCT}")


def enumerate_matchings(X, Y):
    """Every matching between slots of ``X`` and ``Y`` (sizes or collections), once each."""
    n, m = _size(X), _size(Y)
    _guard_matchings(n, m)

    def extend(i, used, pairs):
        if i == n:
            yield Matching(tuple(pairs))
            return
        yield from extend(i + 1, used, pairs)
        for j in range(m):
            if j not in used:
                yield from extend(i + 1, used | {j}, pairs + [(i, j)])

    yield from extend(0, frozenset(), [])


def enumerate_monotone_matchings(X, Y):
    n, m = _size(X), _size(Y)
    _guard_matchings(n, m)
    for k in range(min(n, m) + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(m), k):
                yield Matching(tuple(zip(rows, cols)))


def enumerate_couplings(N, M):
    """All warping paths from ``(0, 0)`` to ``(N-1, M-1)`` with unit steps."""
    N, M = _size(N), _size(M)
    if N < 1 or M < 1:
        raise ValueError("couplings need N, M >= 1")
    if N + M > MAX_COUPLING_SPAN:
        raise OracleScaleError(f"N + M = {N + M} exceeds {MAX_COUPLING_SPAN}")

    def walk(path):
        i, j = path[-1]
        if (i, j) == (N - 1, M - 1):
            yield tuple(path)
            return
        for di, dj in ((0, 1), (1, 0), (1, 1)):
            if i + di < N and j + dj < M:
                yield from walk(path + [(i + di, j + dj)])

    yield from walk([(0, 0)])


def brute_min(cost, relations):
    best = None
    for r in relations:
        c = cost(r)
        if best is None or c < best:
            best = c
    if best is None:
        raise ValueError("minimum over an empty enumeration is undefined")
    return best


def matching_count(n, m):
    return sum(math.comb(n, k) * math.comb(m, k) * math.factorial(k) for k in range(min(n, m) + 1))


def delannoy(a, b):
    return sum(math.comb(a, k) * math.comb(b, k) * 2**k for k in range(min(a, b) + 1))


# -- brute-force distances ---------------------------------------------------

def _null_cost(xs, ys, ground, pairs):
    used_x = {a for a, _ in pairs}
    used_y = {b for _, b in pairs}
    null = ground.null_element
    return sum(ground(x, null) for k, x in enumerate(xs) if k not in used_x) + sum(
        ground(y, null) for k, y in enumerate(ys) if k not in used_y
    )


def _pair_cost(xs, ys, ground, pairs):
    return sum(ground(xs[a], ys[b]) for a, b in pairs)


def brute_matching_distance(X, Y, ground, *, monotone=False):
    xs, ys = _elements(X), _elements(Y)
    stream = (enumerate_monotone_matchings if monotone else enumerate_matchings)(xs, ys)
    return brute_min(lambda M: _pair_cost(xs, ys, ground, M.pairs) + _null_cost(xs, ys, ground, M.pairs), stream)


def brute_fp_matching_distance(X, Y, ground, rho, *, monotone=False):
    xs, ys = _elements(X), _elements(Y)
    stream = (enumerate_monotone_matchings if monotone else enumerate_matchings)(xs, ys)
    total = len(xs) + len(ys)
    return brute_min(lambda M: _pair_cost(xs, ys, ground, M.pairs) + rho * (total - 2 * len(M)), stream)


def brute_edit_distance(X, Y, ground):
    return brute_matching_distance(X, Y, ground, monotone=True)


def brute_fp_edit_distance(X, Y, ground, rho):
    return brute_fp_matching_distance(X, Y, ground, rho, monotone=True)


def _warps(steps):
    present = set(steps)
    return sum(1 for i, j in present if (i, j + 1) in present or (i + 1, j) in present)


def brute_dtw_distance(X, Y, ground, rho=0.0):
    """Minimum over couplings of the summed ground cost plus ``rho`` per warped pair."""
    xs, ys = list(X), list(Y)
    return brute_min(
        lambda C: sum(ground(xs[i], ys[j]) for i, j in C) + rho * _warps(C),
        enumerate_couplings(len(xs), len(ys)),
    )


def brute_assignment(C):
    n = len(C)
    if n > 8:
        raise OracleScaleError(f"{n}! permutations is too many")
    return brute_min(lambda s: sum(C[i][s[i]] for i in range(n)), itertools.permutations(range(n)))


def _is_subsequence(s, seq):
    it = iter(seq)
    return all(v in it for v in s)


def brute_lcs_length(x, y):
    x, y = tuple(x), tuple(y)
    if len(x) > 14:
        raise OracleScaleError("path too long for subsequence enumeration")
    for k in range(min(len(x), len(y)), 0, -1):
        for idx in itertools.combinations(range(len(x)), k):
            if _is_subsequence([x[i] for i in idx], y):
                return k
    return 0


def brute_lsp_length(x, y):
    x, y = tuple(x), tuple(y)
    subpaths_y = {y[i:j] for i in range(len(y)) for j in range(i + 1, len(y) + 1)}
    best = 0
    for i in range(len(x)):
        for j in range(i + 1, len(x) + 1):
            if j - i > best and x[i:j] in subpaths_y:
                best = j - i
    return best


def brute_lcs_distance(x, y):
    return len(x) + len(y) - 2 * brute_lcs_length(x, y)


def brute_lsp_distance(x, y):
    return len(x) + len(y) - 2 * brute_lsp_length(x, y)
