"""Exact discrete optimal transport (the transportation problem).

The solver is the transportation simplex: north-west corner start, MODI
potentials for reduced costs, Bland's rule for the entering cell.  Degenerate
bases are avoided by perturbing supplies by ``eps`` and the last demand by
``K * eps``; once the perturbed problem is optimal the flows on the final
basis tree are recomputed from the unperturbed masses.  Reduced costs do not
depend on the masses, so that basis is optimal for the original problem too.
"""

import math
from collections import deque
from dataclasses import dataclass
from functools import reduce

import numpy as np

from msdist.assignment import solve_assignment
from msdist.errors import EmptyObservationError, InfeasibleError, InvalidInputError, OracleScaleError
from msdist.multiset import Multiset

BALANCE_TOL = 1e-9
PERTURBATION = 1e-12


@dataclass(frozen=True)
class DiscreteDistribution:
    support: tuple
    masses: np.ndarray


@dataclass(frozen=True)
class TransportPlan:
    P: np.ndarray
    row_marginals: np.ndarray
    col_marginals: np.ndarray

    def is_feasible(self, tol=1e-9):
        return (
            bool(np.all(self.P >= 0))
            and np.allclose(self.P.sum(axis=1), self.row_marginals, rtol=0, atol=tol)
            and np.allclose(self.P.sum(axis=0), self.col_marginals, rtol=0, atol=tol)
        )


def to_distribution(X):
    """Probability vector over the support of a multiset, mass = multiplicity / size."""
    X = X if isinstance(X, Multiset) else Multiset(X)
    if len(X) == 0:
        raise EmptyObservationError("cannot build a distribution from an empty multiset")
    size = len(X)
    support = X.support()
    masses = np.array([X.multiplicity(x) / size for x in support], dtype=np.float64)
    return DiscreteDistribution(support, masses)


def _tree_flows(basis, supply, demand):
    """Flows on a spanning-tree basis for the given marginals, by leaf elimination."""
    K, L = len(supply), len(demand)
    adj = [set() for _ in range(K + L)]
    for i, j in basis:
        adj[i].add(K + j)
        adj[K + j].add(i)
    rest = list(supply) + list(demand)
    degree = [len(a) for a in adj]
    flows = {}
    leaves = deque(sorted(node for node in range(K + L) if degree[node] == 1))
    while leaves:
        node = leaves.popleft()
        if degree[node] != 1:
            continue
        (other,) = [o for o in adj[node] if (min(node, o), max(node, o) - K) not in flows]
        cell = (min(node, other), max(node, other) - K)
        f = rest[node]
        flows[cell] = f
        rest[other] -= f
        degree[node] -= 1
        degree[other] -= 1
        if degree[other] == 1:
            leaves.append(other)
    return flows


def _potentials(basis, D, K, L):
    adj = [[] for _ in range(K + L)]
    for i, j in basis:
        adj[i].append(K + j)
        adj[K + j].append(i)
    pot = [None] * (K + L)
    pot[0] = 0.0
    queue = deque([0])
    while queue:
        node = queue.popleft()
        for o in adj[node]:
            if pot[o] is None:
                if node < K:  # o is a column: u_i + v_j = D_ij
                    pot[o] = D[node, o - K] - pot[node]
                else:
                    pot[o] = D[o, node - K] - pot[node]
                queue.append(o)
    return np.array(pot[:K]), np.array(pot[K:])


def _tree_path(basis, K, L, start, goal):
    """Node path between two nodes of the basis tree (rows 0..K-1, columns K..K+L-1)."""
    adj = [[] for _ in range(K + L)]
    for i, j in basis:
        adj[i].append(K + j)
        adj[K + j].append(i)
    parent = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node == goal:
            break
        for o in adj[node]:
            if o not in parent:
                parent[o] = node
                queue.append(o)
    path = [goal]
    while path[-1] != start:
        path.append(parent[path[-1]])
    return path[::-1]


def solve_transport(p, q, D, *, max_iter=None):
    """Minimum-cost transport plan between mass vectors ``p`` and ``q``.

    Returns ``(plan, cost)`` with ``cost = sum(D * plan.P)``.
    """
    p = np.asarray(p, dtype=np.float64).ravel()
    q = np.asarray(q, dtype=np.float64).ravel()
    D = np.ascontiguousarray(D, dtype=np.float64)
    if D.shape != (p.size, q.size):
        raise InvalidInputError(f"cost matrix shape {D.shape} does not match masses ({p.size}, {q.size})")
    if not (np.all(np.isfinite(p)) and np.all(np.isfinite(q)) and np.all(np.isfinite(D))):
        raise InvalidInputError("non-finite input")
    if np.any(p < 0) or np.any(q < 0) or np.any(D < 0):
        raise InvalidInputError("masses and costs must be nonnegative")
    sp, sq = math.fsum(p), math.fsum(q)
    if abs(sp - sq) > BALANCE_TOL:
        raise InfeasibleError(f"unbalanced masses: {sp!r} vs {sq!r}")
    total = (sp + sq) / 2
    P = np.zeros(D.shape)
    if total == 0 or p.size == 0 or q.size == 0:
        return TransportPlan(P, p, q), 0.0
    p = p * (total / sp)
    q = q * (total / sq)

    rows = np.flatnonzero(p > 0)
    cols = np.flatnonzero(q > 0)
    a, b = p[rows], q[cols]
    Dr = D[np.ix_(rows, cols)]
    K, L = a.size, b.size

    eps = PERTURBATION * total
    sa = a + eps
    sb = b.copy()
    sb[-1] += K * eps

    # north-west corner: a staircase spanning tree with K + L - 1 cells
    basis = []
    flow = {}
    ra, rb = sa.copy(), sb.copy()
    i = j = 0
    while True:
        x = min(ra[i], rb[j])
        basis.append((i, j))
        flow[(i, j)] = x
        ra[i] -= x
        rb[j] -= x
        if i == K - 1 and j == L - 1:
            break
        if j == L - 1 or (i < K - 1 and ra[i] <= rb[j]):
            i += 1
        else:
            j += 1

    tol = 1e-12 * max(1.0, float(Dr.max()))
    limit = max_iter if max_iter is not None else 50 * K * L + 1000
    for _ in range(limit):
        u, v = _potentials(basis, Dr, K, L)
        reduced = Dr - u[:, None] - v[None, :]
        candidates = np.flatnonzero(reduced.ravel() < -tol)
        if candidates.size == 0:
            break
        ei, ej = divmod(int(candidates[0]), L)  # Bland: lowest index
        path = _tree_path(basis, K, L, ei, K + ej)
        cycle = [(path[k], path[k + 1]) for k in range(len(path) - 1)]
        cells = [(r, c - K) if r < K else (c, r - K) for r, c in cycle]
        minus = cells[0::2]
        plus = cells[1::2]
        theta = min(flow[c] for c in minus)
        leaving = min(c for c in minus if flow[c] == theta)
        for c in minus:
            flow[c] -= theta
        for c in plus:
            flow[c] += theta
        flow[(ei, ej)] = theta
        del flow[leaving]
        basis.remove(leaving)
        basis.append((ei, ej))
    else:
        raise RuntimeError("transportation simplex did not converge")

    exact = _tree_flows(basis, a, b)
    cost_terms = []
    for (i, j), f in exact.items():
        if f < 0:
            if f < -1e-12 * max(1.0, total):
                raise RuntimeError(f"negative flow {f!r} on optimal basis")
            f = 0.0
        P[rows[i], cols[j]] = f
        cost_terms.append(Dr[i, j] * f)
    return TransportPlan(P, p, q), math.fsum(cost_terms)


def emd_oracle_lcm(X, Y, ground, *, max_size=60):
    """Exact EMD through an assignment on replicated elements.

    With ``n = lcm(|X|, |Y|)``, every element of ``X`` is repeated ``n/|X|``
    times and every element of ``Y`` ``n/|Y|`` times; the balanced transport
    polytope then has a permutation-matrix optimum, so the EMD is the optimal
    assignment cost divided by ``n``.  Test-scale only.
    """
    X = X if isinstance(X, Multiset) else Multiset(X)
    Y = Y if isinstance(Y, Multiset) else Multiset(Y)
    if len(X) == 0 or len(Y) == 0:
        raise EmptyObservationError("EMD is undefined for empty multisets")
    n = reduce(math.lcm, (len(X), len(Y)))
    if n > max_size:
        raise OracleScaleError(f"lcm(|X|, |Y|) = {n} exceeds oracle limit {max_size}")
    xs = [x for x in X.elements() for _ in range(n // len(X))]
    ys = [y for y in Y.elements() for _ in range(n // len(Y))]
    C = ground.matrix(xs, ys)
    return solve_assignment(C).total_cost / n
