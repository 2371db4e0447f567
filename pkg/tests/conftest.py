import random

import pytest

from msdist.ground import abs_metric, lcs_ground, steinhaus_transform

ALPHABET = ("a", "b", "c")


def random_path(rng, max_len=3, min_len=1, alphabet=ALPHABET):
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))


def random_scalars(rng, max_size=4, min_size=0, integer=True):
    k = rng.randint(min_size, max_size)
    if integer:
        return [float(rng.randint(1, 6)) for _ in range(k)]
    return [rng.uniform(0.1, 10.0) for _ in range(k)]


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def absg():
    return abs_metric()


@pytest.fixture
def lcs_bar():
    g = lcs_ground()
    return steinhaus_transform(g, ())
