from __future__ import annotations

import itertools

import numpy as np
import pytest

from hopfzest.errors import ForeignElement, GroupTooLarge, NotNormal
from hopfzest.group import (
    Bicharacter,
    Character,
    all_characters,
    center,
    char_eval,
    character_group,
    cyclic,
    direct_product,
    group_from_json,
    metacyclic33,
    quotient,
    subgroup_generated,
)
from hopfzest.scalar import ONE, unity, zeta

SMALL_GROUPS = [
    cyclic(1),
    cyclic(4),
    cyclic(6),
    direct_product((2, 4)),
    direct_product((2, 9)),
    direct_product((2, 2, 3)),
    metacyclic33(1),
    metacyclic33(3),
    metacyclic33(9),
]


# -- permutation oracle for G(3, ℓ) --------------------------------------------


def _perm_mul(p, q):
    return tuple(p[i] for i in q)


def _perm_pow(p, k):
    out = tuple(range(len(p)))
    for _ in range(k):
        out = _perm_mul(out, p)
    return out


def metacyclic_oracle(ell):
    """Faithful permutation model: s = (0 1 2), t = (1 2) times a 2ℓ-cycle."""
    size = 3 + 2 * ell
    s = (1, 2, 0) + tuple(range(3, size))
    cyc = tuple(3 + (i + 1) % (2 * ell) for i in range(2 * ell))
    t = (0, 2, 1) + cyc

    def word_to_perm(a, b):
        return _perm_mul(_perm_pow(s, a), _perm_pow(t, b))

    return word_to_perm


@pytest.mark.parametrize("ell", [1, 2, 3, 9])
def test_metacyclic_matches_permutation_oracle(ell):
    G = metacyclic33(ell)
    rep = metacyclic_oracle(ell)
    perms = {g: rep(*g.word) for g in G.elements}
    assert len(set(perms.values())) == G.order == 6 * ell
    back = {p: g for g, p in perms.items()}
    for a in G.elements:
        for b in G.elements:
            assert G.mul(a, b) == back[_perm_mul(perms[a], perms[b])]


def test_mul_examples():
    G = metacyclic33(4)
    assert G.mul(G.t(), G.s()) == G.element(2, 1)
    H = direct_product((2, 4))
    assert H.mul(H.element(1, 0), H.element(1, 3)) == H.element(0, 3)
    G3 = metacyclic33(3)
    t2 = G3.pow(G3.t(), 2)
    assert G3.mul(t2, G3.s()) == G3.element(1, 2) == G3.mul(G3.s(), t2)


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=repr)
def test_group_axioms(G):
    T = G.mul_table
    n = G.order
    assert np.array_equal(T[T, :], T[:, T])
    assert np.array_equal(T[0], np.arange(n)) and np.array_equal(T[:, 0], np.arange(n))
    assert (T[np.arange(n), G.inv_table] == 0).all()
    for row in T:
        assert sorted(row) == list(range(n))


def test_foreign_element():
    with pytest.raises(ForeignElement):
        cyclic(4).mul(cyclic(4).element(1), cyclic(5).element(1))
    with pytest.raises(ForeignElement):
        subgroup_generated(cyclic(4), [cyclic(3).element(1)])


def test_order_cap():
    with pytest.raises(GroupTooLarge):
        direct_product((16, 17))


def test_subgroup_examples():
    G = direct_product((2, 4))
    H = subgroup_generated(G, [G.element(1, 0), G.element(0, 2)])
    assert H.order == 4 and all(G.element_order(h) <= 2 for h in H)
    assert subgroup_generated(G, []).order == 1
    M = metacyclic33(9)
    assert subgroup_generated(M, [M.s(), M.pow(M.t(), 3)]).order == 18


def test_quotient_examples():
    G = direct_product((2, 9))
    Q = quotient(G, subgroup_generated(G, [G.element(1, 0), G.element(0, 3)]))
    assert Q.decomposition == (3,) and Q.group is cyclic(3)
    assert quotient(G, subgroup_generated(G, G.elements)).order == 1
    M = metacyclic33(9)
    Q = quotient(M, subgroup_generated(M, [M.s(), M.pow(M.t(), 3)]))
    assert Q.decomposition == (3,)


def test_quotient_rejects_non_normal():
    M = metacyclic33(1)
    with pytest.raises(NotNormal):
        quotient(M, subgroup_generated(M, [M.t()]))


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=repr)
def test_center_normal_and_quotient(G):
    Z = center(G)
    assert Z.is_normal()
    Q = quotient(G, Z)
    assert G.order == Z.order * Q.order
    assert Q.representatives[0] == G.identity


@pytest.mark.parametrize("ell", [1, 2, 3, 9])
def test_center_of_metacyclic(ell):
    M = metacyclic33(ell)
    Z = center(M)
    expected = {M.pow(M.t(), 2 * j) for j in range(ell)}
    assert set(Z.elements) == expected and Z.order == ell
    if ell == 1:
        assert Z.order == 1


def test_center_abelian():
    G = direct_product((2, 4))
    assert center(G).order == G.order


@pytest.mark.parametrize(
    "G,gens",
    [
        (direct_product((2, 4)), [(1, 0)]),
        (direct_product((2, 9)), [(1, 0), (0, 3)]),
        (direct_product((2, 2, 3)), [(0, 1, 1)]),
        (cyclic(12), [(4,)]),
    ],
)
def test_projection_is_surjective_homomorphism(G, gens):
    N = subgroup_generated(G, [G.element(*g) for g in gens])
    Q = quotient(G, N)
    p = Q.projection()
    assert p.is_homomorphism() and p == Q.projection()
    assert set(p.kernel.elements) == set(N.elements)
    assert G.order == N.order * Q.order
    for x in Q.group.elements:
        assert p(p.lift(x)) == x


def test_character_group_examples():
    M = metacyclic33(5)
    (chi,) = character_group(M)
    assert chi(M.s()) == ONE and chi(M.t()) == zeta(10)
    G = direct_product((2, 4))
    nu1, nu2 = character_group(G)
    a1, a2 = G.generators
    assert (nu1(a1), nu1(a2), nu2(a1), nu2(a2)) == (unity(1, 2), ONE, ONE, unity(1, 4))
    triv = Character(G, (ONE, ONE))
    assert all(char_eval(triv, g) == ONE for g in G.elements)


def test_character_validation():
    M = metacyclic33(2)
    with pytest.raises(ValueError):
        Character(M, (zeta(3), ONE))
    with pytest.raises(ValueError):
        Character(cyclic(4), (zeta(8),))


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=repr)
def test_characters_multiplicative(G):
    for chi in all_characters(G)[:24]:
        for a, b in itertools.product(G.elements, repeat=2):
            assert chi(G.mul(a, b)) == chi(a) * chi(b)
        for g in G.elements:
            assert chi(g) ** G.element_order(g) == ONE


@pytest.mark.parametrize("G", [direct_product((2, 4)), cyclic(6), metacyclic33(3)], ids=repr)
def test_characters_separate_abelianization(G):
    chars = all_characters(G)
    Gab = quotient(G, subgroup_generated(G, [G.mul(G.mul(a, b), G.inv(G.mul(b, a))) for a in G.elements for b in G.elements]))
    assert len(chars) == Gab.order
    sigs = {}
    for g in G.elements:
        sigs.setdefault(tuple(chi(g) for chi in chars), set()).add(Gab.coset(g))
    assert all(len(c) == 1 for c in sigs.values())
    assert len(sigs) == Gab.order


def test_bicharacter():
    G = cyclic(4)
    r = Bicharacter(G, ((zeta(4),),))
    s = G.element(1)
    assert r(s, s) == zeta(4) and r(G.element(2), s) == unity(1, 2)
    for a, b, c in itertools.product(G.elements, repeat=3):
        assert r(G.mul(a, b), c) == r(a, c) * r(b, c)
    assert Bicharacter.from_json(G, r.to_json()) == r


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=repr)
def test_json_round_trip(G):
    assert group_from_json(G.to_json()) is G
    for g in G.elements:
        assert G.element_from_json(G.element_to_json(g)) == g


def test_element_order_is_lexicographic():
    M = metacyclic33(2)
    assert [g.word for g in M.elements] == sorted(g.word for g in M.elements)
    assert str(M.element(2, 3)) == "s^2t^3" and str(M.identity) == "1"
