"""Zested coquasi-bialgebra structure constants on the group-like skeleton.

On a group-like basis every axiom collapses to an identity between group
elements or between roots of unity.  Scalars are stored as integer exponents
modulo a common denominator ``D`` so that each axiom becomes a vectorized
integer comparison over ``Γ^3`` or ``Γ^4``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .errors import InvalidDatum
from .group import Character, FiniteGroup, GroupElement, Projection
from .report import CheckResult, Counterexample, VerificationReport
from .scalar import TorsionScalar, common_denominator, unity

__all__ = [
    "ZestedGroupAlgebra",
    "build_zested",
    "build_braided_zested",
    "verify_coquasi_bialgebra",
    "verify_coquasitriangular",
    "CharacterInducing",
    "character_inducing",
]


def _exponents(values, D: int) -> np.ndarray:
    return np.array([int(v.exponent * D) for v in values], dtype=np.int64)


@dataclass(frozen=True)
class ZestedGroupAlgebra:
    """Tables of ``m^λ``, ``Ω`` and optionally ``r^λ`` in canonical element order.

    ``omega[a, b, c]`` and ``r[a, b]`` hold exponents ``e`` standing for
    ``exp(2πi e / den)``.
    """

    group: FiniteGroup
    grading: Projection
    den: int
    mult: np.ndarray
    omega: np.ndarray
    r: np.ndarray | None = None

    def scalar(self, e: int) -> TorsionScalar:
        return unity(int(e), self.den)

    def m(self, g: GroupElement, h: GroupElement) -> GroupElement:
        G = self.group
        return G.elements[self.mult[G.index(g), G.index(h)]]

    def Omega(self, g, h, k) -> TorsionScalar:
        G = self.group
        return self.scalar(self.omega[G.index(g), G.index(h), G.index(k)])

    def R(self, g, h) -> TorsionScalar:
        if self.r is None:
            raise ValueError("no r-form present")
        G = self.group
        return self.scalar(self.r[G.index(g), G.index(h)])

    # -- mutation helpers used by tests and claim checks ------------------------

    def _rescaled(self, value: TorsionScalar):
        D = math.lcm(self.den, value.den)
        f = D // self.den
        r = None if self.r is None else self.r * f
        return D, self.omega * f, r

    def with_omega(self, g, h, k, value: TorsionScalar) -> ZestedGroupAlgebra:
        D, omega, r = self._rescaled(value)
        G = self.group
        omega[G.index(g), G.index(h), G.index(k)] = int(value.exponent * D)
        return replace(self, den=D, omega=omega, r=r)

    def with_mult(self, g, h, x) -> ZestedGroupAlgebra:
        G = self.group
        mult = self.mult.copy()
        mult[G.index(g), G.index(h)] = G.index(x)
        return replace(self, mult=mult)

    def with_r(self, g, h, value: TorsionScalar) -> ZestedGroupAlgebra:
        if self.r is None:
            raise ValueError("no r-form present")
        D, omega, r = self._rescaled(value)
        G = self.group
        r[G.index(g), G.index(h)] = int(value.exponent * D)
        return replace(self, den=D, omega=omega, r=r)

    def to_json(self) -> dict:
        out = {
            "group": self.group.to_json(),
            "grading": {"target": self.grading.target.to_json(), "image": self.grading.image.tolist()},
            "mult": self.mult.tolist(),
            "omega": {"den": self.den, "num": (self.omega % self.den).ravel().tolist()},
        }
        if self.r is not None:
            out["r"] = {"den": self.den, "num": (self.r % self.den).ravel().tolist()}
        return out

    @classmethod
    def from_json(cls, obj: dict) -> ZestedGroupAlgebra:
        from .group import group_from_json

        G = group_from_json(obj["group"])
        T = group_from_json(obj["grading"]["target"])
        n = G.order
        den = int(obj["omega"]["den"])
        omega = np.array(obj["omega"]["num"], dtype=np.int64).reshape(n, n, n)
        r = None
        if "r" in obj:
            rden = int(obj["r"]["den"])
            r = np.array(obj["r"]["num"], dtype=np.int64).reshape(n, n)
            D = math.lcm(den, rden)
            omega, r, den = omega * (D // den), r * (D // rden), D
        return cls(
            G,
            Projection(G, T, np.array(obj["grading"]["image"], dtype=np.int64)),
            den,
            np.array(obj["mult"], dtype=np.int64).reshape(n, n),
            omega,
            r,
        )


def _datum_tables(d):
    """Index and exponent tables for ``λ``, ``ω`` and ``Φ`` of an associative datum."""
    Gam = d.group
    G = d.grading_group
    img = d.grading.image
    lam_idx = np.array([Gam.index(v) for v in d.lam.values], dtype=np.int64).reshape(G.order, G.order)
    phi_vals = {}
    for z in d.gamma0.elements:
        chi = d.phi(z)
        phi_vals[Gam.index(z)] = [chi(h) for h in Gam.elements]
    return Gam, G, img, lam_idx, phi_vals


def build_zested(d, force: bool = False) -> ZestedGroupAlgebra:
    """``m^λ(g,h) = g h λ(ḡ,h̄)`` and ``Ω(g,h,k) = ω(ḡ,h̄,k̄) Φ(λ(ḡ,h̄))(k)``."""
    if not force:
        from .zesting import verify_assoc_datum

        report = verify_assoc_datum(d)
        if not report.passed:
            names = ", ".join(r.name for r in report.failures)
            raise InvalidDatum(f"datum fails verification: {names}", report)
    Gam, G, img, lam_idx, phi_vals = _datum_tables(d)
    D = common_denominator(d.omega.values)
    for vals in phi_vals.values():
        D = math.lcm(D, common_denominator(vals))

    n = Gam.order
    mt = Gam.mul_table
    lam_gh = lam_idx[img[:, None], img[None, :]]
    mult = mt[mt, lam_gh]

    w = _exponents(d.omega.values, D).reshape(G.order, G.order, G.order)
    phi_exp = np.zeros((n, n), dtype=np.int64)
    for zi, vals in phi_vals.items():
        phi_exp[zi] = _exponents(vals, D)
    omega = (w[img[:, None, None], img[None, :, None], img[None, None, :]] + phi_exp[lam_gh][:, :, :]) % D
    return ZestedGroupAlgebra(Gam, d.grading, D, mult, omega)


def build_braided_zested(bd, force: bool = False) -> ZestedGroupAlgebra:
    """Adds ``r^λ(g,h) = t(ḡ,h̄) r0(g,h)`` to the zested tables."""
    if not force:
        from .zesting import verify_braided_datum

        report = verify_braided_datum(bd)
        if not report.passed:
            names = ", ".join(r.name for r in report.failures)
            raise InvalidDatum(f"braided datum fails verification: {names}", report)
    Z = build_zested(bd.assoc, force=True)
    Gam = Z.group
    G = bd.assoc.grading_group
    img = Z.grading.image
    r0_vals = [bd.r0(g, h) for g in Gam.elements for h in Gam.elements]
    D = math.lcm(Z.den, common_denominator(bd.t.values), common_denominator(r0_vals))
    t = _exponents(bd.t.values, D).reshape(G.order, G.order)
    r0 = _exponents(r0_vals, D).reshape(Gam.order, Gam.order)
    r = (t[img[:, None], img[None, :]] + r0) % D
    return replace(Z, den=D, omega=Z.omega * (D // Z.den), r=r)


# -- verification ---------------------------------------------------------------


def _row_from_mask(name, ok: np.ndarray, args_of, sides_of, checked: int) -> CheckResult:
    if ok.all():
        return CheckResult(name, True, None, "", checked)
    first = tuple(int(i) for i in np.argwhere(~ok)[0])
    lhs, rhs = sides_of(first)
    return CheckResult(name, False, Counterexample(args_of(first), lhs, rhs), "", checked)


def verify_coquasi_bialgebra(Z: ZestedGroupAlgebra) -> VerificationReport:
    """Quasi-associativity, unit, pentagon and normalization on group-likes."""
    G, M, W, D = Z.group, Z.mult, Z.omega, Z.den
    els = G.elements
    n = G.order
    rows = []

    left = M[M, :]  # left[g, h, k] = m(m(g,h), k)
    right = M[:, M]  # right[g, h, k] = m(g, m(h,k))
    rows.append(
        _row_from_mask(
            "quasi-associativity",
            left == right,
            lambda i: tuple(els[j] for j in i),
            lambda i: (els[left[i]], els[right[i]]),
            n**3,
        )
    )

    unit_ok = np.stack([M[0, :] == np.arange(n), M[:, 0] == np.arange(n)])
    rows.append(
        _row_from_mask(
            "unit",
            unit_ok,
            lambda i: (("1", els[i[1]]) if i[0] == 0 else (els[i[1]], "1")),
            lambda i: (els[M[0, i[1]] if i[0] == 0 else M[i[1], 0]], els[i[1]]),
            2 * n,
        )
    )

    rows.append(_pentagon(Z))

    norm = W[:, 0, :] % D == 0
    rows.append(
        _row_from_mask(
            "normalization",
            norm,
            lambda i: (els[i[0]], "1", els[i[1]]),
            lambda i: (Z.scalar(W[i[0], 0, i[1]]), Z.scalar(0)),
            n * n,
        )
    )
    return VerificationReport("coquasi-bialgebra axioms on group-likes", rows)


def _pentagon(Z: ZestedGroupAlgebra) -> CheckResult:
    """``Ω(hk,l,t) Ω(h,k,lt) = Ω(h,k,l) Ω(h,kl,t) Ω(k,l,t)``, products in ``m^λ``."""
    G, M, W, D = Z.group, Z.mult, Z.omega, Z.den
    els = G.elements
    n = G.order
    for h in range(n):
        Wh = W[h]
        lhs = W[M[h]] + Wh[:, M]
        rhs = Wh[:, :, None] + Wh[M] + W
        bad = (lhs - rhs) % D != 0
        if bad.any():
            k, l, t = (int(x) for x in np.argwhere(bad)[0])
            return CheckResult(
                "pentagon",
                False,
                Counterexample(
                    (els[h], els[k], els[l], els[t]), Z.scalar(lhs[k, l, t]), Z.scalar(rhs[k, l, t])
                ),
                "",
                (h + 1) * n**3,
            )
    return CheckResult("pentagon", True, None, "", n**4)


def verify_coquasitriangular(Z: ZestedGroupAlgebra) -> VerificationReport:
    """Commutativity and both hexagons of an r-form on group-likes."""
    if Z.r is None:
        raise ValueError("no r-form present")
    G, M, W, R, D = Z.group, Z.mult, Z.omega, Z.r, Z.den
    els = G.elements
    n = G.order
    rows = [
        _row_from_mask(
            "r-form commutativity",
            M == M.T,
            lambda i: (els[i[0]], els[i[1]]),
            lambda i: (els[M[i]], els[M.T[i]]),
            n * n,
        )
    ]
    H, K, L = np.ix_(range(n), range(n), range(n))
    # r(h, kl) Ω⁻¹(h,k,l) = Ω(k,l,h) r(h,l) Ω⁻¹(k,h,l) r(h,k)
    lhs = R[H, M[K, L]] - W[H, K, L]
    rhs = W[K, L, H] + R[H, L] - W[K, H, L] + R[H, K]
    rows.append(
        _row_from_mask(
            "left hexagon",
            (lhs - rhs) % D == 0,
            lambda i: tuple(els[j] for j in i),
            lambda i: (Z.scalar(lhs[i]), Z.scalar(rhs[i])),
            n**3,
        )
    )
    # r(hk, l) Ω(h,k,l) = Ω⁻¹(l,k,h) r(h,l) Ω(h,l,k) r(k,l)
    lhs2 = R[M[H, K], L] + W[H, K, L]
    rhs2 = -W[L, K, H] + R[H, L] + W[H, L, K] + R[K, L]
    rows.append(
        _row_from_mask(
            "right hexagon",
            (lhs2 - rhs2) % D == 0,
            lambda i: tuple(els[j] for j in i),
            lambda i: (Z.scalar(lhs2[i]), Z.scalar(rhs2[i])),
            n**3,
        )
    )
    return VerificationReport("coquasitriangular axioms on group-likes", rows)


# -- character-inducing group-likes ---------------------------------------------


@dataclass
class CharacterInducing:
    element: GroupElement
    ok: bool
    values: dict | None = None
    character: Character | None = None
    failure: Counterexample | None = None
    reason: str = ""


def character_inducing(bd, g: GroupElement) -> CharacterInducing:
    """``λ_g(s) = r0(γ_s, g) r0(g, γ_s)``, checked over every representative ``γ_s``."""
    proj = bd.assoc.grading
    G = proj.target
    values = {}
    for s in G.elements:
        canonical = proj.lift(s)
        base = bd.r0(canonical, g) * bd.r0(g, canonical)
        for rep in proj.fiber(s):
            val = bd.r0(rep, g) * bd.r0(g, rep)
            if val != base:
                return CharacterInducing(
                    g,
                    False,
                    failure=Counterexample((g, s, canonical, rep), base, val),
                    reason=f"λ_{g} depends on the representative of {s}",
                )
        values[s] = base
    for a in G.elements:
        for b in G.elements:
            lhs, rhs = values[G.mul(a, b)], values[a] * values[b]
            if lhs != rhs:
                return CharacterInducing(
                    g, False, values, failure=Counterexample((g, a, b), lhs, rhs), reason=f"λ_{g} is not multiplicative"
                )
    if G.is_abelian and G.kind in ("cyclic", "product"):
        character = Character(G, tuple(values[x] for x in G.generators))
    else:
        character = None
    return CharacterInducing(g, True, values, character)
