from __future__ import annotations

import pytest

from hopfzest.errors import InvalidParameters, NonDiagonalAction, NotDiagonal, NotNormalSupport
from hopfzest.group import Character, cyclic, direct_product, metacyclic33, subgroup_generated
from hopfzest.scalar import ONE, unity, zeta
from hopfzest.ydmodule import (
    DiagonalAction,
    IndexPermutationAction,
    YetterDrinfeldDatum,
    action_scalar,
    braiding_matrix,
    builtin_a12,
    builtin_fk3,
    support,
    universal_grading,
)


@pytest.mark.parametrize("n", range(2, 7))
def test_a12_braiding_matrix(n):
    V = builtin_a12(n)
    q = zeta(n)
    assert braiding_matrix(V) == ((unity(1, 2), ONE), (q.inverse(), q))


def test_a12_n2_matrix():
    m = unity(1, 2)
    assert braiding_matrix(builtin_a12(2)) == ((m, ONE), (m, m))


@pytest.mark.parametrize("n", range(2, 7))
def test_a12_support_and_grading(n):
    V = builtin_a12(n)
    assert V.group.order == 2 * n * n
    sup = support(V)
    assert sup.order == 2 * n and sup.is_normal()
    U = universal_grading(V)
    assert U.decomposition == (n,)
    assert V.action.characters[0](V.degrees[0]) == unity(1, 2)


def test_a12_n3_support_elements():
    V = builtin_a12(3)
    G = V.group
    expected = {G.element(a, 3 * b) for a in range(2) for b in range(3)}
    assert set(support(V).elements) == expected


def test_empty_datum():
    G = cyclic(4)
    V = YetterDrinfeldDatum(G, (), DiagonalAction(()))
    assert support(V).order == 1
    assert universal_grading(V).order == 4


def test_full_support_gives_trivial_grading():
    G = cyclic(4)
    V = YetterDrinfeldDatum(G, (G.element(1),), DiagonalAction((Character(G, (unity(1, 2),)),)))
    assert universal_grading(V).order == 1


def test_single_vector_matrix():
    G = cyclic(2)
    V = YetterDrinfeldDatum(G, (G.element(1),), DiagonalAction((Character(G, (unity(1, 2),)),)))
    assert braiding_matrix(V) == ((unity(1, 2),),)


@pytest.mark.parametrize("ell,k,order,index", [(9, 1, 18, 3), (3, 1, 6, 3), (1, 0, 6, 1), (4, 0, 24, 1)])
def test_fk3_support_and_grading(ell, k, order, index):
    V = builtin_fk3(ell, k)
    sup = support(V)
    assert sup.order == order and sup.is_normal()
    assert universal_grading(V).order == index


def test_fk3_support_generators():
    V = builtin_fk3(9, 1)
    G = V.group
    assert set(support(V).elements) == set(subgroup_generated(G, [G.s(), G.pow(G.t(), 3)]).elements)
    assert universal_grading(V).decomposition == (3,)


@pytest.mark.parametrize("ell,k", [(9, 1), (3, 1), (1, 0), (5, 2), (6, 2)])
def test_fk3_degrees_closed_under_conjugation(ell, k):
    V = builtin_fk3(ell, k)
    G = V.group
    for g in G.elements:
        perm = V.index_map(g)
        assert sorted(perm) == [0, 1, 2]
        for i, j in enumerate(perm):
            assert G.conj(g, V.degrees[i]) == V.degrees[j]


def test_fk3_trivially_acting_set():
    V = builtin_fk3(9, 1)
    G = V.group
    t6 = G.pow(G.t(), 6)
    assert set(V.action.trivially_acting.elements) == {G.identity, t6, G.pow(t6, 2)}
    for i in range(3):
        assert action_scalar(V, t6, i) == ONE
        assert action_scalar(V, G.identity, i) == ONE
    with pytest.raises(NonDiagonalAction):
        action_scalar(V, G.t(), 0)
    with pytest.raises(NonDiagonalAction):
        action_scalar(V, G.pow(G.t(), 2), 0)


@pytest.mark.parametrize("ell,k", [(2, 2), (3, -1), (0, 0)])
def test_fk3_invalid_parameters(ell, k):
    with pytest.raises(InvalidParameters):
        builtin_fk3(ell, k)


def test_a12_invalid():
    with pytest.raises(InvalidParameters):
        builtin_a12(1)


def test_diagonal_action_scalar():
    V = builtin_a12(3)
    G = V.group
    for g in G.elements:
        for i in range(2):
            assert action_scalar(V, g, i) == V.action.characters[i](g)


def test_not_diagonal():
    with pytest.raises(NotDiagonal):
        braiding_matrix(builtin_fk3(3, 1))


def test_non_normal_support():
    G = metacyclic33(1)
    triv = subgroup_generated(G, [])
    with pytest.raises((NotNormalSupport, InvalidParameters)):
        YetterDrinfeldDatum(G, (G.t(),), IndexPermutationAction(triv))
    H = direct_product((2, 2))
    assert YetterDrinfeldDatum(H, (H.element(1, 0),), DiagonalAction((Character(H, (ONE, ONE)),)))
