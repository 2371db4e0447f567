import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from msdist.assignment import (
    assignment_cost,
    build_cost_matrix_all,
    build_cost_matrix_complete,
    solve_assignment,
)
from msdist.errors import ConfigurationError, InvalidInputError
from msdist.ground import abs_metric, discrete_metric
from msdist.oracle import brute_assignment


def test_examples():
    r = solve_assignment([[0, 1], [1, 0]])
    assert r.permutation == (0, 1) and r.total_cost == 0
    r = solve_assignment([[4, 1], [2, 3]])
    assert r.permutation == (1, 0) and r.total_cost == 3
    assert solve_assignment([[2.5]]).total_cost == 2.5
    assert solve_assignment(np.zeros((0, 0))).total_cost == 0


@pytest.mark.parametrize("bad", [[[1, 2]], [[np.nan]], [[-1.0]], [[np.inf, 0], [0, 0]]])
def test_invalid(bad):
    with pytest.raises(InvalidInputError):
        solve_assignment(bad)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: arrays(np.float64, (n, n), elements=st.floats(0, 100))))
def test_matches_permutation_enumeration(C):
    r = solve_assignment(C)
    assert sorted(r.permutation) == list(range(len(C)))
    assert r.total_cost == assignment_cost(C, r.permutation)
    assert r.total_cost == pytest.approx(brute_assignment(C.tolist()), abs=1e-9)


def test_deterministic():
    C = np.ones((5, 5))
    assert solve_assignment(C).permutation == solve_assignment(C).permutation


def test_complete_examples():
    g = abs_metric()
    C, swapped = build_cost_matrix_complete([1.0], [1.0, 3.0], g, lambda y: abs(y))
    assert not swapped and C.tolist() == [[0, 2], [1, 3]]
    C, _ = build_cost_matrix_complete(["a"], ["a"], discrete_metric(), 1.0)
    assert C.tolist() == [[0]]
    C, _ = build_cost_matrix_complete([], [2.0, 5.0], g, lambda y: abs(y))
    assert C.tolist() == [[2, 5], [2, 5]]
    C, swapped = build_cost_matrix_complete([2.0, 5.0], [], g, lambda y: abs(y))
    assert swapped and C.tolist() == [[2, 5], [2, 5]]


def test_complete_swaps_orientation():
    g = abs_metric()
    C, swapped = build_cost_matrix_complete([1.0, 3.0], [1.0], g, lambda y: abs(y))
    assert swapped and C.tolist() == [[0, 2], [1, 3]]


def test_all_examples():
    g = abs_metric()
    C = build_cost_matrix_all([0.0], [10.0], g, 1.0)
    assert C.tolist() == [[10, 1], [1, 0]] and solve_assignment(C).total_cost == 2
    assert build_cost_matrix_all([], [], g, 1.0).shape == (0, 0)
    C = build_cost_matrix_all([1.0], [1.0], g, 5.0)
    assert C.tolist() == [[0, 5], [5, 0]] and solve_assignment(C).total_cost == 0


def test_missing_penalty():
    with pytest.raises(ConfigurationError):
        build_cost_matrix_all([1.0], [2.0], abs_metric(), None)


def _brute_matchings(xs, ys, g, lam):
    best = float("inf")
    n, m = len(xs), len(ys)
    for k in range(min(n, m) + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.permutations(range(m), k):
                c = sum(g(xs[i], ys[j]) for i, j in zip(rows, cols))
                c += sum(lam(xs[i]) for i in range(n) if i not in rows)
                c += sum(lam(ys[j]) for j in range(m) if j not in cols)
                best = min(best, c)
    return best


@settings(max_examples=150, deadline=None)
@given(st.lists(st.floats(0, 20), max_size=4), st.lists(st.floats(0, 20), max_size=4))
def test_null_penalty_complete_equals_all(xs, ys):
    g = abs_metric()
    lam = lambda v: abs(v)  # noqa: E731
    Cc, _ = build_cost_matrix_complete(xs, ys, g, lam)
    Ca = build_cost_matrix_all(xs, ys, g, lam)
    a = solve_assignment(Ca).total_cost
    assert solve_assignment(Cc).total_cost == pytest.approx(a, abs=1e-9)
    assert a == pytest.approx(_brute_matchings(xs, ys, g, lam), abs=1e-9)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.floats(0, 1), max_size=4), st.lists(st.floats(0, 1), max_size=4))
def test_fixed_penalty_dispatch_threshold(xs, ys):
    g = abs_metric()  # values in [0, 1], so rho = 0.5 reaches the threshold
    Cc, _ = build_cost_matrix_complete(xs, ys, g, 0.5)
    Ca = build_cost_matrix_all(xs, ys, g, 0.5)
    assert solve_assignment(Cc).total_cost == pytest.approx(solve_assignment(Ca).total_cost, abs=1e-9)
