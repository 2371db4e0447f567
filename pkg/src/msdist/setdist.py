"""Distances between multisets: matching, fixed-penalty matching, EMD and sEMD."""

from dataclasses import dataclass

import numpy as np

from msdist.assignment import build_cost_matrix_all, build_cost_matrix_complete, solve_assignment
from msdist.errors import ConfigurationError, InvalidMatchingError
from msdist.multiset import Multiset
from msdist.transport import solve_transport, to_distribution

__all__ = [
    "Multiset",
    "Matching",
    "PenaltySpec",
    "matching_cost",
    "matching_distance",
    "fixed_penalty_matching_distance",
    "emd",
    "semd",
]


@dataclass(frozen=True)
class Matching:
    """Pairs of ``(x_slot, y_slot)`` indices into ``X.elements()`` and ``Y.elements()``."""

    pairs: tuple

    def __len__(self):
        return len(self.pairs)

    def validate(self, nx, ny):
        xs = [a for a, _ in self.pairs]
        ys = [b for _, b in self.pairs]
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise InvalidMatchingError("a slot is matched more than once")
        if any(not 0 <= a < nx for a in xs) or any(not 0 <= b < ny for b in ys):
            raise InvalidMatchingError("slot index out of range")

    def is_complete(self, nx, ny):
        return len(self.pairs) == min(nx, ny)


@dataclass(frozen=True)
class PenaltySpec:
    """How unmatched elements are priced: ``d(x, null)`` or a fixed ``rho``."""

    kind: str
    rho: float = 0.0

    def __post_init__(self):
        if self.kind not in ("null_reference", "fixed"):
            raise ConfigurationError(f"unknown penalty kind {self.kind!r}")
        if self.kind == "fixed" and not self.rho > 0:
            raise ConfigurationError(f"rho must be positive, got {self.rho!r}")

    @classmethod
    def null_reference(cls):
        return cls("null_reference")

    @classmethod
    def fixed(cls, rho):
        return cls("fixed", rho)


def _as_multiset(X):
    return X if isinstance(X, Multiset) else Multiset(X)


def _expanded_matrix(X, Y, ground):
    """Ground distances between expanded slots, evaluated once per support pair."""
    S = ground.matrix(list(X.support()), list(Y.support()))
    ix = np.repeat(np.arange(len(X.support())), [k for _, k in X.items()])
    iy = np.repeat(np.arange(len(Y.support())), [k for _, k in Y.items()])
    return S[np.ix_(ix, iy)]


def _check_rho(rho):
    if not rho > 0:
        raise ConfigurationError(f"rho must be positive, got {rho!r}")


def _null_penalty(ground):
    if not ground.has_null:
        raise ConfigurationError(f"ground metric {ground.name!r} has no null element")
    null = ground.null_element
    return lambda x: ground(x, null)


def matching_cost(M, X, Y, ground, penalty):
    """Cost of a given matching: matched ground distances plus unmatched penalties."""
    xs = _as_multiset(X).elements()
    ys = _as_multiset(Y).elements()
    M.validate(len(xs), len(ys))
    cost = sum(ground(xs[a], ys[b]) for a, b in M.pairs)
    if penalty.kind == "fixed":
        return cost + penalty.rho * (len(xs) + len(ys) - 2 * len(M))
    lam = _null_penalty(ground)
    used_x = {a for a, _ in M.pairs}
    used_y = {b for _, b in M.pairs}
    cost += sum(lam(x) for k, x in enumerate(xs) if k not in used_x)
    cost += sum(lam(y) for k, y in enumerate(ys) if k not in used_y)
    return cost


def _matching_from_complete(sigma, n_small, swapped):
    pairs = [(i, sigma[i]) for i in range(n_small)]
    if swapped:
        pairs = [(b, a) for a, b in pairs]
    return Matching(tuple(sorted(pairs)))


def _matching_from_all(sigma, nx, ny):
    return Matching(tuple((i, sigma[i]) for i in range(nx) if sigma[i] < ny))


def matching_distance(X, Y, ground):
    """Minimum matching cost with unmatched elements priced at ``d(x, null)``.

    An optimal complete matching always exists for this penalty, so the
    smaller ``max(|X|, |Y|)``-square reduction suffices.
    """
    lam = _null_penalty(ground)
    X, Y = _as_multiset(X), _as_multiset(Y)
    xs, ys = X.elements(), Y.elements()
    if not xs and not ys:
        return 0.0, Matching(())
    pairwise = _expanded_matrix(X, Y, ground) if xs and ys else None
    C, swapped = build_cost_matrix_complete(xs, ys, ground, lam, pairwise=pairwise)
    res = solve_assignment(C)
    return res.total_cost, _matching_from_complete(res.permutation, min(len(xs), len(ys)), swapped)


def fixed_penalty_matching_distance(X, Y, ground, rho):
    """Minimum matching cost with every unmatched element priced at ``rho``.

    When ``rho`` is at least half the largest pairwise ground distance some
    optimal matching is complete and the square reduction is used; otherwise
    the ``(|X|+|Y|)``-square reduction covering all matchings is used.
    """
    _check_rho(rho)
    X, Y = _as_multiset(X), _as_multiset(Y)
    xs, ys = X.elements(), Y.elements()
    if not xs and not ys:
        return 0.0, Matching(())
    pairwise = _expanded_matrix(X, Y, ground) if xs and ys else None
    if ground.upper_bound is not None and rho >= ground.upper_bound / 2:
        complete = True
    else:
        largest = float(pairwise.max()) if pairwise is not None else 0.0
        complete = rho >= largest / 2
    if complete:
        C, swapped = build_cost_matrix_complete(xs, ys, ground, rho, pairwise=pairwise)
        res = solve_assignment(C)
        return res.total_cost, _matching_from_complete(res.permutation, min(len(xs), len(ys)), swapped)
    C = build_cost_matrix_all(xs, ys, ground, rho, pairwise=pairwise)
    res = solve_assignment(C)
    return res.total_cost, _matching_from_all(res.permutation, len(xs), len(ys))


def emd(X, Y, ground):
    """Earth mover's distance between the normalized multiplicity distributions."""
    mu = to_distribution(_as_multiset(X))
    nu = to_distribution(_as_multiset(Y))
    D = ground.matrix(list(mu.support), list(nu.support))
    plan, cost = solve_transport(mu.masses, nu.masses, D)
    return cost, plan


def abs_size_difference(n, m):
    return float(abs(n - m))


def semd(X, Y, ground, tau, size_distance=abs_size_difference):
    """``tau * EMD + (1 - tau) * size_distance(|X|, |Y|)``; a metric on multisets."""
    if not 0 < tau < 1:
        raise ConfigurationError(f"tau must lie in (0, 1), got {tau!r}")
    X, Y = _as_multiset(X), _as_multiset(Y)
    value, _ = emd(X, Y, ground)
    return tau * value + (1 - tau) * size_distance(len(X), len(Y))
