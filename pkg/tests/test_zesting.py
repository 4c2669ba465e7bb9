from __future__ import annotations

import itertools
import math

import pytest

from hopfzest.cochain import NormalizedCochain, UnityCoefficients, std_omega3, std_theta4
from hopfzest.coquasi import character_inducing
from hopfzest.errors import InvalidParameters, NotCyclic, NotInGamma0, RootMismatch
from hopfzest.group import Bicharacter, Character, character_group, direct_product, quotient, subgroup_generated
from hopfzest.scalar import ONE, ts_nth_roots, unity, zeta
from hopfzest.ydmodule import DiagonalAction, YetterDrinfeldDatum, builtin_a12, builtin_fk3, universal_grading
from hopfzest.zesting import (
    BraidedZestingDatum,
    CharacterMap,
    a12_gamma0,
    builtin_z4_braided,
    coset_representatives,
    cyclic_zesting,
    enumerate_a12,
    enumerate_cyclic_zestings,
    enumerate_fk3,
    evaluate_assoczesting,
    evaluate_bz2,
    evaluate_bz3,
    fk3_gamma0,
    gamma_eval,
    phi_candidates,
    trivial_datum,
    verify_assoc_datum,
    verify_braided_datum,
)

ASSOC_ROWS = [
    "gamma0 in support",
    "central condition",
    "grading factors through U(H)",
    "phi homomorphism",
    "central-subgroup condition",
    "lambda 2-cocycle",
    "omega normalized",
    "(assoczesting)",
]


def a12_setup(n):
    V = builtin_a12(n)
    g0 = a12_gamma0(V)
    return V, g0, universal_grading(V).projection(), phi_candidates(V, g0)


def test_gamma_eval_a12():
    V, g0, _, phis = a12_setup(2)
    d = enumerate_a12(2)[0]
    a1 = V.degrees[0]
    assert gamma_eval(d, a1, a1) == unity(1, 2)
    assert all(gamma_eval(d, V.group.identity, h) == ONE for h in V.group.elements)
    with pytest.raises(NotInGamma0):
        gamma_eval(d, V.group.element(0, 1), a1)


def test_gamma_eval_fk3():
    d = next(x for x in enumerate_fk3(9, 1) if x.meta["family"] == 1)
    G = d.group
    t6 = G.pow(G.t(), 6)
    assert gamma_eval(d, t6, t6) == ONE
    # χ^6 evaluated at t: ζ18^6 = ζ3
    assert gamma_eval(d, t6, G.t()) == zeta(3)


@pytest.mark.parametrize("d", [enumerate_a12(4)[5], enumerate_fk3(9, 1)[13]], ids=["a12", "fk3"])
def test_gamma_eval_is_bicharacter(d):
    G = d.group
    Z = d.gamma0.elements
    for a, b in itertools.product(Z, repeat=2):
        for h in G.elements:
            assert gamma_eval(d, G.mul(a, b), h) == gamma_eval(d, a, h) * gamma_eval(d, b, h)
    for a in Z:
        for h, k in itertools.product(G.elements, repeat=2):
            assert gamma_eval(d, a, G.mul(h, k)) == gamma_eval(d, a, h) * gamma_eval(d, a, k)


@pytest.mark.parametrize("n", range(2, 7))
def test_phi_candidates_a12(n):
    V, g0, _, phis = a12_setup(n)
    nu1, nu2 = character_group(V.group)
    expected = [nu1] if n % 2 else [nu1, nu1 * nu2 ** (n * n // 2)]
    assert [p.images[0] for p in phis] == expected


def test_phi_candidates_fk3():
    V = builtin_fk3(9, 1)
    phis = phi_candidates(V, fk3_gamma0(V))
    (chi,) = character_group(V.group)
    assert [p.images[0] for p in phis] == [chi**w for w in (0, 6, 12)]
    # closed form: Φ_a(t^{2N}) = χ^{a·2ℓ/d}
    assert [p.images[0] for p in phis] == [chi ** (a * 18 // 3) for a in range(3)]


def test_character_map_homomorphism_witness():
    G = direct_product((2, 4))
    H = subgroup_generated(G, [G.element(1, 0)])
    bad = CharacterMap(H, (Character(G, (ONE, unity(1, 4))),))
    assert not bad.is_homomorphism and bad.homomorphism_witness() is not None
    good = CharacterMap(H, (Character(G, (ONE, unity(1, 2))),))
    assert good.is_homomorphism and good(G.element(1, 0)) == Character(G, (ONE, unity(1, 2)))


def test_coset_representatives():
    V = builtin_fk3(9, 1)
    G = V.group
    t6 = G.pow(G.t(), 6)
    assert coset_representatives(fk3_gamma0(V), 3) == [G.identity, t6, G.pow(t6, 2)]
    assert coset_representatives(fk3_gamma0(V), 1) == [G.identity]


def test_cyclic_zesting_a12_n3():
    V, g0, proj, (phi,) = a12_setup(3)
    d = cyclic_zesting(V, proj, g0, phi, V.degrees[0], unity(1, 6))
    assert d.meta["m"] == "-1"
    assert verify_assoc_datum(d).passed


def test_cyclic_zesting_identity_nu():
    V, g0, proj, (phi,) = a12_setup(3)
    d = cyclic_zesting(V, proj, g0, phi, V.group.identity, ONE)
    assert verify_assoc_datum(d).passed and d.lam.is_identity


def test_cyclic_zesting_fk3():
    V = builtin_fk3(9, 1)
    g0 = fk3_gamma0(V)
    phi = phi_candidates(V, g0)[1]
    G = V.group
    d = cyclic_zesting(V, universal_grading(V).projection(), g0, phi, G.pow(G.t(), 6), zeta(3))
    assert d.meta["m"] == "1"
    assert verify_assoc_datum(d).passed


def test_cyclic_zesting_errors():
    V, g0, proj, (phi, _) = a12_setup(2)
    with pytest.raises(RootMismatch):
        cyclic_zesting(V, proj, g0, phi, V.degrees[0], ONE)
    with pytest.raises(NotInGamma0):
        cyclic_zesting(V, proj, g0, phi, V.group.element(0, 1), ONE)
    G = V.group
    # Γ → Γ/1 ≅ C_2 × C_4 is not cyclic
    noncyc = quotient(G, subgroup_generated(G, [])).projection()
    with pytest.raises(NotCyclic):
        cyclic_zesting(V, noncyc, g0, phi, V.degrees[0], unity(1, 4))
    with pytest.raises(NotCyclic):
        enumerate_cyclic_zestings(V, g0, grading=noncyc)


def test_failing_datum_a12_n2():
    """ω^(s) with s² = 1 while m = -1 breaks the compatibility at (1,1,1,1)."""
    d = enumerate_a12(2)[0]
    for s in ts_nth_roots(ONE, 2):
        bad = type(d)(d.yd, d.grading, d.gamma0, d.phi, d.lam, std_omega3(s, 2), {})
        rep = verify_assoc_datum(bad)
        assert [r.name for r in rep.failures] == ["(assoczesting)"]
        cx = rep.row("(assoczesting)").counterexample
        one = d.grading_group.element(1)
        assert cx.args == (one,) * 4
        lhs, rhs = evaluate_assoczesting(bad, *cx.args)
        assert (lhs, rhs) == (unity(1, 2), ONE)


def test_trivial_datum_passes():
    for V in (builtin_a12(3), builtin_fk3(9, 1), builtin_fk3(3, 1)):
        rep = verify_assoc_datum(trivial_datum(V))
        assert rep.passed and rep.names() == ASSOC_ROWS


@pytest.mark.parametrize("n", range(2, 7))
def test_a12_enumeration(n):
    data = enumerate_a12(n)
    assert len(data) == (n if n % 2 else 2 * n)
    for d in data:
        assert verify_assoc_datum(d).passed


def test_fk3_enumeration():
    data = enumerate_fk3(9, 1)
    assert len(data) == 27
    N, ell = 3, 9
    dd = math.gcd(N, ell // N)
    assert len(data) == dd * dd * N
    assert {(x.meta["family"], x.meta["class"]) for x in data} == set(itertools.product(range(3), range(3)))
    for x in data[::4]:
        assert verify_assoc_datum(x).passed
    small = enumerate_fk3(3, 1)
    assert len(small) == 3
    for x in small:
        assert x.gamma0.order == 1 and x.lam.is_identity
        assert verify_assoc_datum(x).passed
    assert len(enumerate_fk3(1, 0)) == 1
    with pytest.raises(InvalidParameters):
        enumerate_fk3(4, 1)


@pytest.mark.parametrize("d", enumerate_a12(4) + enumerate_fk3(9, 1)[::5], ids=lambda d: str(d.meta))
def test_compatibility_lhs_is_theta(d):
    """⟨γ(λ(g1,g2)), λ(g3,g4)⟩ = θ^(m)(g1,...,g4) with m = ⟨γ(ν),ν⟩."""
    G = d.grading_group
    nu = next((x for x in d.gamma0.elements if str(x) == d.meta["nu"]))
    m = gamma_eval(d, nu, nu)
    theta = std_theta4(m, G.order)
    for args in itertools.product(G.elements, repeat=4):
        lhs, rhs = evaluate_assoczesting(d, *args)
        assert lhs == theta(*args) == rhs


def test_verify_report_order():
    rep = verify_assoc_datum(enumerate_a12(3)[0])
    assert rep.names() == ASSOC_ROWS


# -- braided ---------------------------------------------------------------------


@pytest.mark.parametrize("zeta_value", ts_nth_roots(ONE, 4), ids=str)
def test_z4_bz2_whenever_eta_squared_is_zeta(zeta_value):
    for eta in ts_nth_roots(zeta_value, 2):
        bd = builtin_z4_braided(zeta_value, eta)
        assert verify_braided_datum(bd).row("BZ2").passed
        one = bd.assoc.grading_group.element(1)
        assert evaluate_bz2(bd, one, one, one) == (zeta_value, eta**2)


def test_z4_bz2_fails_if_eta_squared_differs():
    bd = builtin_z4_braided(unity(1, 2), ONE)
    assert not verify_braided_datum(bd).row("BZ2").passed


@pytest.mark.parametrize("zeta_value", ts_nth_roots(ONE, 4), ids=str)
def test_z4_assoczesting_and_bz3_iff_zeta_squared_one(zeta_value):
    eta = ts_nth_roots(zeta_value, 2)[0]
    bd = builtin_z4_braided(zeta_value, eta)
    rep = verify_braided_datum(bd)
    ok = zeta_value**2 == ONE
    assert rep.row("(assoczesting)").passed == ok
    assert rep.row("BZ3").passed == ok
    assert rep.passed == ok
    one = bd.assoc.grading_group.element(1)
    assert evaluate_assoczesting(bd.assoc, one, one, one, one) == (ONE, zeta_value**2)
    lhs, rhs = evaluate_bz3(bd, one, one, one)
    assert lhs == ONE
    assert (lhs == rhs) == ok
    if not ok:
        cx = rep.row("(assoczesting)").counterexample
        assert cx.args == (one,) * 4 and (cx.lhs, cx.rhs) == (ONE, unity(1, 2))


def test_z4_fixed_rows():
    rep = verify_braided_datum(builtin_z4_braided(unity(1, 2), unity(1, 4)))
    for name in ("G abelian", "lambda symmetric", "r0 compatible with phi", "character inducing",
                 "BZ3 representative independence"):
        assert rep.row(name).passed, name
    assert rep.names()[: len(ASSOC_ROWS)] == ASSOC_ROWS


def test_character_inducing():
    bd = builtin_z4_braided(unity(1, 2), unity(1, 4))
    Gam = bd.assoc.group
    res = character_inducing(bd, Gam.element(2))
    assert res.ok and all(v == ONE for v in res.values.values())
    G = bd.assoc.grading_group
    assert res.character == Character(G, (ONE,))
    # σ: both representatives of the odd coset give r0(σ,σ)² = r0(σ³,σ³)² = -1
    odd = character_inducing(bd, Gam.element(1))
    assert odd.ok and odd.character == Character(G, (unity(1, 2),))
    triv = character_inducing(bd, Gam.identity)
    assert triv.ok and triv.character == Character(G, (ONE,))


def test_character_inducing_detects_representative_dependence():
    H = direct_product((2, 2))
    a, b = H.element(1, 0), H.element(0, 1)
    V = YetterDrinfeldDatum(H, (a,), DiagonalAction((Character(H, (ONE, ONE)),)))
    d = trivial_datum(V)
    G = d.grading_group
    r0 = Bicharacter(H, ((ONE, unity(1, 2)), (ONE, ONE)))
    t = NormalizedCochain(2, G, UnityCoefficients(), [ONE] * 4)
    bd = BraidedZestingDatum(d, r0, t)
    # trivial coset {1, a}: the identity gives 1 but r0(a,b) r0(b,a) = -1
    res = character_inducing(bd, b)
    assert not res.ok
    cx = res.failure
    assert (cx.lhs, cx.rhs) == (ONE, unity(1, 2)) and cx.args[2:] == (H.identity, a)
    assert character_inducing(bd, a).ok
