import random

import numpy as np
import pytest

from msdist.errors import EmptyObservationError, InfeasibleError, InvalidInputError, OracleScaleError
from msdist.ground import abs_metric
from msdist.multiset import Multiset
from msdist.transport import emd_oracle_lcm, solve_transport, to_distribution


def test_to_distribution():
    d = to_distribution(Multiset([1, 1, 1, 2, 2, 3]))
    assert d.support == (1, 2, 3)
    assert d.masses.tolist() == pytest.approx([1 / 2, 1 / 3, 1 / 6], abs=1e-15)
    assert to_distribution(["a"]).masses.tolist() == [1.0]
    assert to_distribution([0, 0, 2]).masses.tolist() == pytest.approx([2 / 3, 1 / 3])
    with pytest.raises(EmptyObservationError):
        to_distribution([])


def test_solve_examples():
    p = np.array([0.2, 0.3, 0.5])
    D = np.abs(np.subtract.outer([0, 1, 2], [0, 1, 2])).astype(float)
    plan, cost = solve_transport(p, p, D)
    assert cost == 0 and plan.is_feasible()
    plan, cost = solve_transport([2 / 3, 1 / 3], [0.5, 0.5], [[0, 2], [2, 0]])
    assert cost == pytest.approx(1 / 3, abs=1e-12)
    assert solve_transport([1.0], [1.0], [[4.5]])[1] == 4.5


def test_solve_errors():
    with pytest.raises(InfeasibleError):
        solve_transport([1.0], [0.5], [[1.0]])
    with pytest.raises(InvalidInputError):
        solve_transport([1.0], [1.0], [[1.0, 2.0]])
    with pytest.raises(InvalidInputError):
        solve_transport([1.0], [1.0], [[np.nan]])
    with pytest.raises(InvalidInputError):
        solve_transport([1.0], [1.0], [[-1.0]])


def test_zero_masses_are_dropped():
    plan, cost = solve_transport([0.0, 1.0], [1.0, 0.0], [[0, 0], [3, 0]])
    assert cost == 3 and plan.P.tolist() == [[0, 0], [1, 0]]


def test_oracle_examples():
    g = abs_metric()
    assert emd_oracle_lcm([0, 0, 2], [0, 2], g) == pytest.approx(1 / 3)
    assert emd_oracle_lcm([1, 2], [1, 2], g) == 0
    assert emd_oracle_lcm([1], [1, 1], g) == 0
    with pytest.raises(OracleScaleError):
        emd_oracle_lcm([1] * 7, [1] * 11, g)
    with pytest.raises(EmptyObservationError):
        emd_oracle_lcm([], [1], g)


def test_against_oracle_and_symmetry():
    rng = random.Random(3)
    g = abs_metric()
    for _ in range(150):
        X = Multiset([rng.randint(0, 3) * 1.5 for _ in range(rng.randint(1, 6))])
        Y = Multiset([rng.randint(0, 3) * 1.5 for _ in range(rng.randint(1, 6))])
        mu, nu = to_distribution(X), to_distribution(Y)
        D = g.matrix(list(mu.support), list(nu.support))
        plan, cost = solve_transport(mu.masses, nu.masses, D)
        assert plan.is_feasible()
        assert cost == pytest.approx(emd_oracle_lcm(X, Y, g), abs=1e-9)
        _, back = solve_transport(nu.masses, mu.masses, D.T)
        assert back == pytest.approx(cost, abs=1e-12)


def test_random_dense_against_lp():
    linprog = pytest.importorskip("scipy.optimize").linprog
    rng = np.random.default_rng(0)
    for _ in range(40):
        K, L = rng.integers(1, 9, 2)
        p = rng.random(K)
        q = rng.random(L)
        p /= p.sum()
        q = q / q.sum() * p.sum()
        D = rng.random((K, L)) * 10
        plan, cost = solve_transport(p, q, D)
        A = np.vstack([np.kron(np.eye(K), np.ones(L)), np.kron(np.ones(K), np.eye(L))])
        ref = linprog(D.ravel(), A_eq=A, b_eq=np.concatenate([p, q]), bounds=(0, None), method="highs")
        assert plan.is_feasible()
        assert cost == pytest.approx(ref.fun, abs=1e-9)
