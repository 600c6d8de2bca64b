import pytest

from genusbound.oracle import GeneratorWord, exhaustive_l, random_symplectic_basis, random_word
from genusbound.reduction import EmbeddingMap, l_invariant
from genusbound.symplattice import SymplecticBasis, verify_basis

from conftest import gram, standard_j


def test_random_basis_examples():
    assert random_symplectic_basis(3, 0, 7) == SymplecticBasis.identity(3)
    b = random_symplectic_basis(2, 10, 1)
    assert verify_basis(b)
    assert b == random_symplectic_basis(2, 10, 1)


@pytest.mark.parametrize("g", [1, 2, 3, 4, 6])
def test_random_words_are_symplectic(g):
    for seed in range(25):
        w = random_word(g, 30, seed)
        assert isinstance(w, GeneratorWord) and len(w.letters) == 30
        assert gram(w.apply().vectors) == standard_j(g)


def test_exhaustive_examples():
    r = exhaustive_l(EmbeddingMap.zero(1, 2), 0)
    assert r.value == 1 and r.stabilized
    r = exhaustive_l(EmbeddingMap(2, 1, ((0, 0, 1, 0),)), 4)
    assert r.value == 2 and r.stabilized
    r = exhaustive_l(EmbeddingMap(1, 2, ((1, 0), (0, 1))), 4)
    assert r.value == 0 and r.stabilized and r.history == (0,)


def test_exhaustive_searches_whole_budget():
    # one-dimensional kernel spanned by (1, -1, -2, 1, 2, 1); first reached at depth 3
    e = EmbeddingMap(3, 5, ((2, -1, 1, 0, 0, -1), (0, 1, 0, 1, -1, 2), (1, 0, 0, 1, -1, 0), (0, 1, 0, 1, 0, 0), (1, 1, 0, 0, 0, 0)))
    r = exhaustive_l(e, 4)
    assert r.history[:3] == (0, 0, 0)
    assert r.value == 1 == l_invariant(e) and r.stabilized


def test_exhaustive_plateau_certifies_below_cap():
    # kernel span(A_1, B_1): cap is 2 but only one of the pair can be isotropic
    rows = tuple(tuple(int(c == r) for c in range(4)) for r in (1, 3))
    r = exhaustive_l(EmbeddingMap(2, 2, rows), 4)
    assert r.value == 1 and r.stabilized and r.budget_used == 4


def test_exhaustive_needs_moves():
    # kernel spanned by B_1: the standard Lagrangian misses it, one swap finds it
    e = EmbeddingMap(1, 1, ((1, 0),))
    assert l_invariant(e) == 1
    r = exhaustive_l(e, 5)
    assert r.history[0] == 0 and r.value == 1 and r.budget_used == 1


def test_exhaustive_budget_too_small_is_not_stabilized():
    e = EmbeddingMap(1, 1, ((1, 0),))
    r = exhaustive_l(e, 0)
    assert r.value == 0 and not r.stabilized


def test_exhaustive_partial_when_state_cap_hit():
    e = EmbeddingMap(3, 3, ((1, 1, 0, 0, 1, 0), (0, 1, 1, 0, 0, 1), (1, 0, 1, 1, 0, 0)))
    r = exhaustive_l(e, 10, max_states=50)
    assert r.partial and not r.stabilized
