"""Yetter-Drinfeld data for the skew-primitive generators of ``B # kΓ``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParameters, NonDiagonalAction, NotDiagonal, NotNormalSupport
from .group import (
    Character,
    FiniteGroup,
    GroupElement,
    QuotientGroup,
    Subgroup,
    center,
    direct_product,
    intersection,
    metacyclic33,
    quotient,
    subgroup_generated,
)
from .scalar import ONE, TorsionScalar, zeta

__all__ = [
    "DiagonalAction",
    "IndexPermutationAction",
    "YetterDrinfeldDatum",
    "support",
    "universal_grading",
    "braiding_matrix",
    "action_scalar",
    "builtin_a12",
    "builtin_fk3",
]


@dataclass(frozen=True)
class DiagonalAction:
    """``g · x_i = χ_i(g) x_i``."""

    characters: tuple[Character, ...]


@dataclass(frozen=True)
class IndexPermutationAction:
    """``g · x_i = ± x_{g·i}`` where ``g g_i g⁻¹ = g_{g·i}``.

    Signs are not recorded.  Only the elements of ``trivially_acting`` (central
    elements acting as the identity) have a known scalar action.
    """

    trivially_acting: Subgroup


@dataclass(frozen=True)
class YetterDrinfeldDatum:
    group: FiniteGroup
    degrees: tuple[GroupElement, ...]
    action: DiagonalAction | IndexPermutationAction
    name: str = field(default="", compare=False)

    def __post_init__(self):
        G = self.group
        for g in self.degrees:
            G.check(g)
        if isinstance(self.action, DiagonalAction):
            if len(self.action.characters) != len(self.degrees):
                raise InvalidParameters("one character per basis vector is required")
            for chi in self.action.characters:
                if chi.group is not G:
                    raise InvalidParameters("character defined on a different group")
        elif isinstance(self.action, IndexPermutationAction):
            triv = self.action.trivially_acting
            if triv.parent is not G:
                raise InvalidParameters("trivially acting subgroup of a different group")
            if not triv.is_central():
                raise InvalidParameters("trivially acting elements must be central")
            for g in G.generators:
                self.index_map(g)
        else:
            raise InvalidParameters(f"unknown action {self.action!r}")
        sup = subgroup_generated(G, self.degrees)
        witness = sup.non_normal_witness()
        if witness is not None:
            raise NotNormalSupport(f"support is not normal: conjugating by {witness[0]} leaves it")
        object.__setattr__(self, "_support", sup)

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def is_diagonal(self) -> bool:
        return isinstance(self.action, DiagonalAction)

    def index_map(self, g: GroupElement) -> tuple[int, ...]:
        """``i ↦ g·i`` determined by conjugation of degrees."""
        G = self.group
        out = []
        for gi in self.degrees:
            c = G.conj(g, gi)
            if c not in self.degrees:
                raise InvalidParameters(f"{g} conjugates degree {gi} outside the degree set")
            out.append(self.degrees.index(c))
        return tuple(out)


def support(V: YetterDrinfeldDatum) -> Subgroup:
    return V._support


def universal_grading(V: YetterDrinfeldDatum) -> QuotientGroup:
    return quotient(V.group, support(V))


def braiding_matrix(V: YetterDrinfeldDatum) -> tuple[tuple[TorsionScalar, ...], ...]:
    """``q_ij = χ_j(g_i)``."""
    if not V.is_diagonal:
        raise NotDiagonal("braiding matrix is defined for diagonal actions only")
    chis = V.action.characters
    return tuple(tuple(chi(gi) for chi in chis) for gi in V.degrees)


def action_scalar(V: YetterDrinfeldDatum, g: GroupElement, i: int) -> TorsionScalar:
    """The scalar ``c`` with ``g · x_i = c x_i``."""
    V.group.check(g)
    if not 0 <= i < V.dim:
        raise IndexError(f"basis index {i} out of range")
    if V.is_diagonal:
        return V.action.characters[i](g)
    if g == V.group.identity or g in V.action.trivially_acting:
        return ONE
    if V.index_map(g)[i] != i:
        raise NonDiagonalAction(f"{g} moves x_{i}")
    raise NonDiagonalAction(f"the sign of {g} on x_{i} is not determined by the datum")


def builtin_a12(n: int) -> YetterDrinfeldDatum:
    """Super type ``A(1|2)`` over ``C_2 × C_{n²}`` with ``q = ζ_n``.

    ``χ_1(α_1) = -1, χ_1(α_2) = ζ_{n²}^{n-1}`` and ``χ_2(α_1) = 1,
    χ_2(α_2) = ζ_{n²}``, so that ``q_ij = χ_j(g_i)`` reproduces
    ``((-1, 1), (q⁻¹, q))``.
    """
    if n < 2:
        raise InvalidParameters("n must be at least 2")
    G = direct_product((2, n * n))
    chi1 = Character(G, (zeta(2), zeta(n * n, n - 1)))
    chi2 = Character(G, (ONE, zeta(n * n)))
    return YetterDrinfeldDatum(
        G, (G.element(1, 0), G.element(0, n)), DiagonalAction((chi1, chi2)), name=f"A(1|2), n={n}"
    )


def builtin_fk3(ell: int, k: int) -> YetterDrinfeldDatum:
    """Fomin-Kirillov ``FK_3`` realized over ``G(3, ℓ)`` with degrees ``s^i t^{2k+1}``."""
    if ell < 1 or not 0 <= k < ell:
        raise InvalidParameters(f"need 0 <= k < ell, got ell={ell}, k={k}")
    G = metacyclic33(ell)
    N = 2 * k + 1
    degrees = tuple(G.element(i, N) for i in range(3))
    sup = subgroup_generated(G, degrees)
    triv = intersection(center(G), sup)
    return YetterDrinfeldDatum(G, degrees, IndexPermutationAction(triv), name=f"FK3, ell={ell}, k={k}")
