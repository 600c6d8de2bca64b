import random

import pytest


def standard_j(g):
    """Explicit 2g x 2g matrix of the standard form, built entry by entry."""
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        J[i][g + i] = 1
        J[g + i][i] = -1
    return J


def pairing(u, v):
    """u^T J v by plain matrix products; independent of form_eval."""
    g = len(u) // 2
    J = standard_j(g)
    return sum(u[r] * J[r][c] * v[c] for r in range(2 * g) for c in range(2 * g))


def gram(vectors):
    return [[pairing(u, v) for v in vectors] for u in vectors]


@pytest.fixture
def rng():
    return random.Random(20261016)
