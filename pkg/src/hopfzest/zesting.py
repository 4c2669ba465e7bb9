"""Associative and braided zesting data for pointed Hopf algebras ``B # kΓ``.

An associative datum over a grading ``Γ → G`` consists of a central subgroup
``Γ₀ ⊆ supp(V)``, a homomorphism ``Φ: Γ₀ → Γ̂``, a normalized 2-cocycle
``λ: G² → Γ₀`` and a normalized 3-cochain ``ω: G³ → k^×`` with

    Φ(λ(g1, g2))(λ(g3, g4)) = δω(g1, g2, g3, g4).

A braided datum adds a bicharacter ``r0`` on ``Γ`` and a 2-cochain ``t`` on
``G``.  The verifiers never raise on mathematical failure; every condition is
a report row.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .cochain import GroupCoefficients, NormalizedCochain, UnityCoefficients, delta, std_lambda2, std_omega3
from .errors import (
    InvalidParameters,
    NonDiagonalAction,
    NotCyclic,
    NotInGamma0,
    RootMismatch,
)
from .group import (
    Bicharacter,
    Character,
    GroupElement,
    Projection,
    Subgroup,
    all_characters,
    cyclic,
    subgroup_generated,
)
from .report import CheckResult, Counterexample, VerificationReport
from .scalar import ONE, TorsionScalar, ts_nth_roots, zeta
from .ydmodule import (
    DiagonalAction,
    YetterDrinfeldDatum,
    action_scalar,
    builtin_a12,
    builtin_fk3,
    support,
    universal_grading,
)

__all__ = [
    "CharacterMap",
    "AssociativeZestingDatum",
    "BraidedZestingDatum",
    "gamma_eval",
    "verify_assoc_datum",
    "cyclic_zesting",
    "phi_candidates",
    "coset_representatives",
    "enumerate_cyclic_zestings",
    "a12_gamma0",
    "fk3_gamma0",
    "enumerate_a12",
    "enumerate_fk3",
    "trivial_datum",
    "verify_braided_datum",
    "evaluate_assoczesting",
    "evaluate_bz2",
    "evaluate_bz3",
    "builtin_z4_braided",
]


@dataclass(frozen=True)
class CharacterMap:
    """``Φ: Γ₀ → Γ̂`` given by the images of the generators of ``Γ₀``."""

    gamma0: Subgroup
    images: tuple[Character, ...]

    def __post_init__(self):
        if len(self.images) != len(self.gamma0.generators):
            raise ValueError("one character per generator of Γ₀ is required")
        for chi in self.images:
            if chi.group is not self.gamma0.parent:
                raise ValueError("characters must be defined on the ambient group")

    def _extend(self):
        cached = self.__dict__.get("_ext")
        if cached is not None:
            return cached
        G = self.gamma0.parent
        trivial = Character(G, tuple(ONE for _ in G.generators))
        table = {G.identity: trivial}
        witness = None
        todo = deque([G.identity])
        while todo and witness is None:
            x = todo.popleft()
            for g, chi in zip(self.gamma0.generators, self.images):
                y = G.mul(x, g)
                val = table[x] * chi
                if y not in table:
                    table[y] = val
                    todo.append(y)
                elif table[y] != val:
                    witness = Counterexample((y,), str(table[y]), str(val))
                    break
        ext = (table, witness)
        object.__setattr__(self, "_ext", ext)
        return ext

    @property
    def is_homomorphism(self) -> bool:
        return self._extend()[1] is None

    def homomorphism_witness(self) -> Counterexample | None:
        return self._extend()[1]

    def __call__(self, g: GroupElement) -> Character:
        if g not in self.gamma0:
            raise NotInGamma0(f"{g} is not in Γ₀")
        table, witness = self._extend()
        if witness is not None:
            raise ValueError("Φ does not extend to a homomorphism")
        return table[g]

    def __str__(self) -> str:
        return ", ".join(f"{g} ↦ {chi}" for g, chi in zip(self.gamma0.generators, self.images)) or "trivial"


@dataclass(frozen=True)
class AssociativeZestingDatum:
    yd: YetterDrinfeldDatum
    grading: Projection
    gamma0: Subgroup
    phi: CharacterMap
    lam: NormalizedCochain
    omega: NormalizedCochain
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        G = self.grading.target
        if self.grading.source is not self.yd.group or self.gamma0.parent is not self.yd.group:
            raise InvalidParameters("grading, Γ₀ and the YD datum must share the group Γ")
        if self.phi.gamma0 != self.gamma0:
            raise InvalidParameters("Φ must be defined on Γ₀")
        if self.lam.arity != 2 or self.lam.domain is not G:
            raise InvalidParameters("λ must be a 2-cochain on the grading group")
        if self.omega.arity != 3 or self.omega.domain is not G:
            raise InvalidParameters("ω must be a 3-cochain on the grading group")
        if not isinstance(self.omega.coefficients, UnityCoefficients):
            raise InvalidParameters("ω must take root-of-unity values")

    @property
    def group(self):
        return self.yd.group

    @property
    def grading_group(self):
        return self.grading.target


@dataclass(frozen=True)
class BraidedZestingDatum:
    assoc: AssociativeZestingDatum
    r0: Bicharacter
    t: NormalizedCochain
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.r0.group is not self.assoc.group:
            raise InvalidParameters("r0 must be a bicharacter of Γ")
        if self.t.arity != 2 or self.t.domain is not self.assoc.grading_group:
            raise InvalidParameters("t must be a 2-cochain on the grading group")


def gamma_eval(d: AssociativeZestingDatum, g: GroupElement, h: GroupElement) -> TorsionScalar:
    """``⟨γ(g), h⟩ = Φ(g)(h)`` for ``g ∈ Γ₀`` and ``h ∈ Γ``."""
    return d.phi(g)(h)


# -- associative verification ---------------------------------------------------


def _first_failure(name, cases, note="") -> CheckResult:
    """Run ``cases`` (an iterable of ``(args, lhs, rhs)``) until the first mismatch."""
    n = 0
    for args, lhs, rhs in cases:
        n += 1
        if lhs != rhs:
            return CheckResult(name, False, Counterexample(tuple(args), lhs, rhs), note, n)
    return CheckResult(name, True, None, note, n)


def evaluate_assoczesting(d: AssociativeZestingDatum, g1, g2, g3, g4) -> tuple[TorsionScalar, TorsionScalar]:
    """Both sides of the compatibility condition at one quadruple."""
    G, w, lam = d.grading_group, d.omega, d.lam
    lhs = gamma_eval(d, lam(g1, g2), lam(g3, g4))
    rhs = (
        w(g1, g2, g3)
        * w(g1, G.mul(g2, g3), g4)
        * w(g2, g3, g4)
        / (w(G.mul(g1, g2), g3, g4) * w(g1, g2, G.mul(g3, g4)))
    )
    return lhs, rhs


def verify_assoc_datum(d: AssociativeZestingDatum) -> VerificationReport:
    Gam, G = d.group, d.grading_group
    V = d.yd
    sup = support(V)
    rows = []

    rows.append(
        _first_failure(
            "gamma0 in support",
            (((g,), g in sup, True) for g in d.gamma0.generators),
        )
    )
    rows.append(
        _first_failure(
            "central condition",
            (((z, g), Gam.mul(z, g), Gam.mul(g, z)) for z in d.gamma0.generators for g in Gam.generators),
        )
    )
    rows.append(
        _first_failure(
            "grading factors through U(H)",
            (((g,), d.grading(g), G.identity) for g in sup.generators),
        )
    )

    hom_witness = d.phi.homomorphism_witness()
    rows.append(
        CheckResult("phi homomorphism", hom_witness is None, hom_witness, "", len(d.gamma0.generators))
    )

    if hom_witness is None:
        rows.append(_central_subgroup_row(d))
    else:
        rows.append(CheckResult("central-subgroup condition", False, None, "Φ is not a homomorphism"))

    rows.append(
        _first_failure(
            "lambda 2-cocycle",
            _nonidentity_cases(delta(d.lam)),
            "λ is normalized by construction",
        )
    )
    rows.append(
        _first_failure(
            "omega normalized",
            (
                ((a, b, c), d.omega(a, b, c), ONE)
                for a, b, c in itertools.product(G.elements, repeat=3)
                if G.identity in (a, b, c)
            ),
        )
    )
    if hom_witness is None:
        rows.append(
            _first_failure(
                "(assoczesting)",
                ((args, *evaluate_assoczesting(d, *args)) for args in itertools.product(G.elements, repeat=4)),
            )
        )
    else:
        rows.append(CheckResult("(assoczesting)", False, None, "Φ is not a homomorphism"))
    return VerificationReport(f"associative zesting datum{_title(d)}", rows)


def _title(d: AssociativeZestingDatum) -> str:
    name = d.yd.name
    return f" for {name}" if name else ""


def _nonidentity_cases(c: NormalizedCochain):
    G = c.domain
    ident = c.coefficients.identity
    for idx, v in zip(itertools.product(G.elements, repeat=c.arity), c.values):
        yield idx, v, ident


def _central_subgroup_row(d: AssociativeZestingDatum) -> CheckResult:
    name = "central-subgroup condition"
    V = d.yd
    n = 0
    for g in d.gamma0.elements:
        for i, gi in enumerate(V.degrees):
            n += 1
            try:
                lhs = action_scalar(V, g, i)
            except NonDiagonalAction as exc:
                return CheckResult(name, False, None, f"action of {g} on x_{i}: {exc}", n)
            rhs = gamma_eval(d, g, gi)
            if lhs != rhs:
                return CheckResult(name, False, Counterexample((g, f"x_{i}"), lhs, rhs), "", n)
    return CheckResult(name, True, None, "", n)


# -- cyclic construction --------------------------------------------------------


def cyclic_zesting(
    yd: YetterDrinfeldDatum,
    grading: Projection,
    gamma0: Subgroup,
    phi: CharacterMap,
    nu: GroupElement,
    q: TorsionScalar,
    meta: dict | None = None,
) -> AssociativeZestingDatum:
    """``(Φ, λ^(ν), ω^(q))`` over a cyclic grading ``C_N``; requires ``q^N = Φ(ν)(ν)``."""
    G = grading.target
    if G.kind != "cyclic":
        raise NotCyclic(f"grading group {G!r} is not cyclic")
    if not gamma0.is_abelian():
        raise InvalidParameters("Γ₀ must be abelian")
    if nu not in gamma0:
        raise NotInGamma0(f"ν = {nu} is not in Γ₀")
    N = G.order
    m = phi(nu)(nu)
    if q**N != m:
        raise RootMismatch(f"q^N = {q**N} but ⟨γ(ν), ν⟩ = {m}")
    lam = std_lambda2(nu, N, GroupCoefficients(yd.group, gamma0))
    omega = std_omega3(q, N, UnityCoefficients())
    info = {"phi": str(phi), "nu": str(nu), "q": str(q), "m": str(m)}
    info.update(meta or {})
    return AssociativeZestingDatum(yd, grading, gamma0, phi, lam, omega, info)


def phi_candidates(yd: YetterDrinfeldDatum, gamma0: Subgroup) -> list[CharacterMap]:
    """All ``Φ: Γ₀ → Γ̂`` that are homomorphisms and satisfy the central-subgroup condition.

    Assignments of characters to the generators of ``Γ₀`` are searched in
    lexicographic order of character exponents.
    """
    chars = all_characters(yd.group)
    found = []
    for images in itertools.product(chars, repeat=len(gamma0.generators)):
        phi = CharacterMap(gamma0, images)
        if not phi.is_homomorphism:
            continue
        if all(
            action_scalar(yd, g, i) == phi(g)(gi)
            for g in gamma0.elements
            for i, gi in enumerate(yd.degrees)
        ):
            found.append(phi)
    return found


def coset_representatives(gamma0: Subgroup, N: int) -> list[GroupElement]:
    """Representatives of ``Γ₀ / Γ₀^N``: powers of the first generator first."""
    G = gamma0.parent
    powers = {G.pow(g, N) for g in gamma0.elements}
    sub_n = subgroup_generated(G, sorted(powers))
    candidates = []
    if gamma0.generators:
        g0 = gamma0.generators[0]
        candidates = [G.pow(g0, j) for j in range(G.element_order(g0))]
    candidates += list(gamma0.elements)
    reps, covered = [], set()
    for c in candidates:
        if c in covered:
            continue
        reps.append(c)
        covered.update(G.mul(c, x) for x in sub_n.elements)
    return reps


def enumerate_cyclic_zestings(
    yd: YetterDrinfeldDatum,
    gamma0: Subgroup,
    grading: Projection | None = None,
    nus=None,
) -> list[AssociativeZestingDatum]:
    """Every ``(Φ, λ^(ν), ω^(q))`` with ``Φ`` from :func:`phi_candidates`,
    ``ν`` from ``nus`` (default: :func:`coset_representatives`) and ``q`` an
    ``N``-th root of ``Φ(ν)(ν)``.
    """
    if grading is None:
        grading = universal_grading(yd).projection()
    if grading.target.kind != "cyclic":
        raise NotCyclic(f"grading group {grading.target!r} is not cyclic")
    N = grading.target.order
    if nus is None:
        nus = coset_representatives(gamma0, N)
    out = []
    for a, phi in enumerate(phi_candidates(yd, gamma0)):
        for s, nu in enumerate(nus):
            m = phi(nu)(nu)
            for j, q in enumerate(ts_nth_roots(m, N)):
                out.append(
                    cyclic_zesting(yd, grading, gamma0, phi, nu, q, {"family": a, "class": s, "root": j})
                )
    return out


def a12_gamma0(yd: YetterDrinfeldDatum) -> Subgroup:
    return subgroup_generated(yd.group, [yd.degrees[0]])


def fk3_gamma0(yd: YetterDrinfeldDatum) -> Subgroup:
    return yd.action.trivially_acting


def enumerate_a12(n: int) -> list[AssociativeZestingDatum]:
    """Zestings of ``A(1|2)`` with ``Γ₀ = ⟨α₁⟩`` and ``ν = α₁``."""
    yd = builtin_a12(n)
    return enumerate_cyclic_zestings(yd, a12_gamma0(yd), nus=[yd.degrees[0]])


def enumerate_fk3(ell: int, k: int) -> list[AssociativeZestingDatum]:
    """Zestings of ``FK_3`` over ``G(3, ℓ)`` with ``Γ₀ = Z(Γ) ∩ supp(V)``; needs ``2k+1 | ℓ``."""
    N = 2 * k + 1
    if ell % N:
        raise InvalidParameters(f"N = {N} must divide ell = {ell}")
    yd = builtin_fk3(ell, k)
    return enumerate_cyclic_zestings(yd, fk3_gamma0(yd))


def trivial_datum(yd: YetterDrinfeldDatum, grading: Projection | None = None) -> AssociativeZestingDatum:
    if grading is None:
        grading = universal_grading(yd).projection()
    Gam, G = yd.group, grading.target
    triv = subgroup_generated(Gam, [])
    phi = CharacterMap(triv, ())
    lam = NormalizedCochain(2, G, GroupCoefficients(Gam, triv), [Gam.identity] * G.order**2)
    omega = NormalizedCochain(3, G, UnityCoefficients(), [ONE] * G.order**3)
    return AssociativeZestingDatum(yd, grading, triv, phi, lam, omega, {"phi": "trivial"})


# -- braided verification -------------------------------------------------------


def evaluate_bz2(bd: BraidedZestingDatum, g1, g2, g3) -> tuple[TorsionScalar, TorsionScalar]:
    w, t, G = bd.assoc.omega, bd.t, bd.assoc.grading_group
    lhs = w(g1, g2, g3) * w(g2, g3, g1) / w(g2, g1, g3)
    rhs = t(g1, g2) * t(g1, g3) / t(g1, G.mul(g2, g3))
    return lhs, rhs


def _bz3_rhs(bd: BraidedZestingDatum, g1, g2, g3) -> TorsionScalar:
    w, t, G = bd.assoc.omega, bd.t, bd.assoc.grading_group
    return (w(g1, g2, g3) * w(g3, g1, g2) / w(g1, g3, g2)) * (
        t(g1, g3) * t(g2, g3) / t(G.mul(g1, g2), g3)
    )


def _double_braiding(bd: BraidedZestingDatum, x: GroupElement, y: GroupElement) -> TorsionScalar:
    return bd.r0(x, y) * bd.r0(y, x)


def evaluate_bz3(bd: BraidedZestingDatum, g1, g2, g3) -> tuple[TorsionScalar, TorsionScalar]:
    """Both sides with ``r0`` evaluated on the canonical representative of ``g3``."""
    rep = bd.assoc.grading.lift(g3)
    lhs = _double_braiding(bd, bd.assoc.lam(g1, g2), rep)
    return lhs, _bz3_rhs(bd, g1, g2, g3)


def verify_braided_datum(bd: BraidedZestingDatum) -> VerificationReport:
    from .coquasi import character_inducing

    d = bd.assoc
    G = d.grading_group
    report = verify_assoc_datum(d)
    report.title = f"braided zesting datum{_title(d)}"
    rows = report.rows

    rows.append(CheckResult("G abelian", G.is_abelian, None, "", 1))
    rows.append(
        _first_failure(
            "lambda symmetric",
            (((a, b), d.lam(a, b), d.lam(b, a)) for a, b in itertools.product(G.elements, repeat=2)),
        )
    )
    if d.phi.is_homomorphism:
        rows.append(
            _first_failure(
                "r0 compatible with phi",
                (
                    ((g, gi), bd.r0(g, gi).inverse(), gamma_eval(d, g, gi))
                    for g in d.gamma0.elements
                    for gi in d.yd.degrees
                ),
            )
        )
    else:
        rows.append(CheckResult("r0 compatible with phi", False, None, "Φ is not a homomorphism"))

    values = sorted(set(d.lam.values), key=d.group.index)
    row = CheckResult("character inducing", True, None, "", 0)
    for v in values:
        res = character_inducing(bd, v)
        row.checked += 1
        if not res.ok:
            row = CheckResult("character inducing", False, res.failure, res.reason, row.checked)
            break
    rows.append(row)

    rows.append(
        _first_failure(
            "BZ2",
            ((args, *evaluate_bz2(bd, *args)) for args in itertools.product(G.elements, repeat=3)),
        )
    )
    rows.append(
        _first_failure(
            "BZ3",
            ((args, *evaluate_bz3(bd, *args)) for args in itertools.product(G.elements, repeat=3)),
            "r0 evaluated at the canonical representative of g3",
        )
    )

    def independence():
        for g1, g2, g3 in itertools.product(G.elements, repeat=3):
            lam = d.lam(g1, g2)
            base = _double_braiding(bd, lam, d.grading.lift(g3))
            for rep in d.grading.fiber(g3):
                yield (g1, g2, g3, rep), _double_braiding(bd, lam, rep), base

    rows.append(_first_failure("BZ3 representative independence", independence()))
    return report


def builtin_z4_braided(zeta_value: TorsionScalar, eta: TorsionScalar) -> BraidedZestingDatum:
    """The ``ℤ/4`` example: ``r0(σ,σ) = i``, ``Γ₀ = ⟨σ²⟩``, ``Φ(σ²)(σ) = -1``,
    ``λ(1,1) = σ²``, ``ω(1,1,1) = ζ``, ``t(1,1) = η``.

    The basis of ``V`` is a single vector of degree ``σ²`` acted on by
    ``r0(σ², -)``; the example's remaining sign constraint on ``V`` cannot be
    met and is not imposed.
    """
    Gam = cyclic(4)
    sigma, g = Gam.element(1), Gam.element(2)
    r0 = Bicharacter(Gam, ((zeta(4),),))
    chi = Character(Gam, (r0(g, sigma),))
    yd = YetterDrinfeldDatum(Gam, (g,), DiagonalAction((chi,)), name="Z/4 example")
    grading = universal_grading(yd).projection()
    G = grading.target
    gamma0 = subgroup_generated(Gam, [g])
    phi = CharacterMap(gamma0, (Character(Gam, (zeta(2),)),))
    lam = std_lambda2(g, 2, GroupCoefficients(Gam, gamma0))
    omega = std_omega3(zeta_value, 2, UnityCoefficients())
    t = NormalizedCochain.from_function(
        2, G, UnityCoefficients(), lambda a, b: eta if a.word[0] and b.word[0] else ONE
    )
    assoc = AssociativeZestingDatum(yd, grading, gamma0, phi, lam, omega, {"zeta": str(zeta_value)})
    return BraidedZestingDatum(assoc, r0, t, {"zeta": str(zeta_value), "eta": str(eta)})
