"""Normalized group cochains with trivial action.

Coefficients are written multiplicatively.  Besides the coboundary operator
this module provides the standard cochains on ``C_N``

    beta_nu(i)           = nu^i
    lambda^(nu)(i, j)    = nu      if i + j >= N, else 1
    omega^(q)(i, j, k)   = q^k     if i + j >= N, else 1
    theta^(nu)(i,j,k,l)  = nu      if i + j >= N and k + l >= N, else 1

and a brute-force cohomology oracle used to validate the classical
isomorphisms ``H^2(C_N, M) ≅ M/M^N`` and ``H^3(C_N, M) ≅ M_N``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ArityTooHigh, BudgetExceeded, NotNormalized
from .group import FiniteGroup, GroupElement, Subgroup, cyclic
from .scalar import ONE, TorsionScalar, unity

__all__ = [
    "CoefficientGroup",
    "GroupCoefficients",
    "UnityCoefficients",
    "NormalizedCochain",
    "delta",
    "is_cocycle",
    "constant_cochain",
    "std_beta",
    "std_lambda2",
    "std_omega3",
    "std_theta4",
    "CohomologyResult",
    "enumerate_cohomology",
    "cohomologous",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 1 << 20


class CoefficientGroup:
    """An abelian group of coefficients, written multiplicatively."""

    identity: object

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def pow(self, a, k: int):
        raise NotImplementedError

    def __contains__(self, a) -> bool:
        raise NotImplementedError

    def finite_elements(self) -> list:
        """All elements, for exhaustive enumeration; raises if infinite."""
        raise NotImplementedError

    def value_to_json(self, a):
        raise NotImplementedError

    def value_from_json(self, obj):
        raise NotImplementedError


class GroupCoefficients(CoefficientGroup):
    """Values in an abelian finite group, or in an abelian subgroup of one."""

    def __init__(self, group: FiniteGroup, subgroup: Subgroup | None = None):
        self.group = group
        self.subgroup = subgroup
        members = subgroup.elements if subgroup is not None else group.elements
        if any(group.mul(a, b) != group.mul(b, a) for a in members for b in members):
            raise ValueError("coefficient group must be abelian")
        self.identity = group.identity

    def mul(self, a, b):
        return self.group.mul(a, b)

    def inv(self, a):
        return self.group.inv(a)

    def pow(self, a, k: int):
        return self.group.pow(a, k)

    def __contains__(self, a) -> bool:
        if self.subgroup is not None:
            return a in self.subgroup
        return a in self.group

    def finite_elements(self) -> list:
        return list(self.subgroup.elements if self.subgroup is not None else self.group.elements)

    def value_to_json(self, a):
        return self.group.element_to_json(a)

    def value_from_json(self, obj):
        return self.group.element_from_json(obj)

    def to_json(self) -> dict:
        out = {"type": "group", "group": self.group.to_json()}
        if self.subgroup is not None:
            out["subgroup"] = [self.group.element_to_json(g) for g in self.subgroup.generators]
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupCoefficients)
            and other.group is self.group
            and self.finite_elements() == other.finite_elements()
        )

    def __hash__(self):
        return hash(("group", self.group.key, len(self.finite_elements())))

    def __repr__(self) -> str:
        if self.subgroup is not None:
            return f"GroupCoefficients({self.subgroup!r})"
        return f"GroupCoefficients({self.group!r})"


class UnityCoefficients(CoefficientGroup):
    """Nonzero roots of unity; restricted to ``μ_order`` when ``order`` is set."""

    def __init__(self, order: int | None = None):
        self.order = order
        self.identity = ONE

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def pow(self, a, k: int):
        return a**k

    def __contains__(self, a) -> bool:
        if not isinstance(a, TorsionScalar) or a.is_zero:
            return False
        return self.order is None or self.order % a.order == 0

    def finite_elements(self) -> list:
        if self.order is None:
            raise BudgetExceeded("the group of all roots of unity is infinite; set an order")
        return [unity(j, self.order) for j in range(self.order)]

    def value_to_json(self, a):
        return a.to_json()

    def value_from_json(self, obj):
        return TorsionScalar.from_json(obj)

    def to_json(self) -> dict:
        out = {"type": "unity"}
        if self.order is not None:
            out["order"] = self.order
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, UnityCoefficients) and other.order == self.order

    def __hash__(self):
        return hash(("unity", self.order))

    def __repr__(self) -> str:
        return "UnityCoefficients()" if self.order is None else f"UnityCoefficients({self.order})"


def coefficients_from_json(obj: dict, group_from_json) -> CoefficientGroup:
    if obj.get("type") == "unity":
        return UnityCoefficients(obj.get("order"))
    if obj.get("type") == "group":
        from .group import subgroup_generated

        G = group_from_json(obj["group"])
        sub = None
        if "subgroup" in obj:
            sub = subgroup_generated(G, [G.element_from_json(x) for x in obj["subgroup"]])
        return GroupCoefficients(G, sub)
    raise ValueError(f"unknown coefficient format {obj!r}")


def _coefficients_for(value) -> CoefficientGroup:
    if isinstance(value, TorsionScalar):
        return UnityCoefficients()
    if isinstance(value, GroupElement):
        from .group import _cached_group

        return GroupCoefficients(_cached_group(*value.key))
    raise TypeError(f"cannot infer a coefficient group for {value!r}")


class NormalizedCochain:
    """A normalized ``n``-cochain ``G^n → M`` stored as a dense table.

    Values are listed in canonical order of ``G^n`` (lexicographic in element
    indices).  Normalization is enforced: any argument equal to the identity
    forces the identity value.
    """

    def __init__(self, arity: int, domain: FiniteGroup, coefficients: CoefficientGroup, values):
        if not 1 <= arity <= 4:
            raise ArityTooHigh(f"arity {arity} outside 1..4")
        values = tuple(values)
        size = domain.order**arity
        if len(values) != size:
            raise ValueError(f"expected {size} values, got {len(values)}")
        for v in values:
            if v not in coefficients:
                raise ValueError(f"value {v} is not in the coefficient group {coefficients!r}")
        self.arity = arity
        self.domain = domain
        self.coefficients = coefficients
        self.values = values
        ident = coefficients.identity
        for pos, idx in enumerate(itertools.product(range(domain.order), repeat=arity)):
            if 0 in idx and values[pos] != ident:
                args = ", ".join(str(domain.elements[i]) for i in idx)
                raise NotNormalized(f"value at ({args}) is {values[pos]}, expected the identity")

    @classmethod
    def from_function(cls, arity, domain, coefficients, f) -> NormalizedCochain:
        els = domain.elements
        return cls(
            arity,
            domain,
            coefficients,
            [f(*(els[i] for i in idx)) for idx in itertools.product(range(domain.order), repeat=arity)],
        )

    def _flat(self, indices) -> int:
        pos = 0
        for i in indices:
            pos = pos * self.domain.order + i
        return pos

    def at(self, *indices: int):
        return self.values[self._flat(indices)]

    def __call__(self, *args: GroupElement):
        if len(args) != self.arity:
            raise TypeError(f"expected {self.arity} arguments")
        return self.values[self._flat(self.domain.index(g) for g in args)]

    @property
    def is_identity(self) -> bool:
        ident = self.coefficients.identity
        return all(v == ident for v in self.values)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NormalizedCochain)
            and self.arity == other.arity
            and self.domain is other.domain
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.arity, self.domain.key, self.values))

    def __mul__(self, other: NormalizedCochain) -> NormalizedCochain:
        if other.arity != self.arity or other.domain is not self.domain:
            raise ValueError("cochains of different shapes")
        M = self.coefficients
        return NormalizedCochain(
            self.arity, self.domain, M, [M.mul(a, b) for a, b in zip(self.values, other.values)]
        )

    def inverse(self) -> NormalizedCochain:
        M = self.coefficients
        return NormalizedCochain(self.arity, self.domain, M, [M.inv(a) for a in self.values])

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "group": self.domain.to_json(),
            "coefficients": self.coefficients.to_json(),
            "values": [self.coefficients.value_to_json(v) for v in self.values],
        }

    @classmethod
    def from_json(cls, obj: dict) -> NormalizedCochain:
        from .group import group_from_json

        M = coefficients_from_json(obj["coefficients"], group_from_json)
        G = group_from_json(obj["group"])
        return cls(int(obj["arity"]), G, M, [M.value_from_json(v) for v in obj["values"]])

    def __repr__(self) -> str:
        return f"NormalizedCochain(arity={self.arity}, domain={self.domain!r}, {self.coefficients!r})"


def constant_cochain(arity: int, domain: FiniteGroup, coefficients: CoefficientGroup) -> NormalizedCochain:
    return NormalizedCochain(arity, domain, coefficients, [coefficients.identity] * domain.order**arity)


def delta(c: NormalizedCochain) -> NormalizedCochain:
    """Coboundary with trivial action.

    ``(δc)(g_1..g_{n+1}) = c(g_2..g_{n+1}) · Π_i c(.., g_i g_{i+1}, ..)^{(-1)^i}
    · c(g_1..g_n)^{(-1)^{n+1}}``.
    """
    n = c.arity
    if n > 3:
        raise ArityTooHigh("delta is implemented for arity at most 3")
    G, M = c.domain, c.coefficients
    tab = G.mul_table
    out = []
    for idx in itertools.product(range(G.order), repeat=n + 1):
        value = c.at(*idx[1:])
        for i in range(n):
            merged = idx[:i] + (int(tab[idx[i], idx[i + 1]]),) + idx[i + 2 :]
            term = c.at(*merged)
            value = M.mul(value, term if i % 2 else M.inv(term))
        last = c.at(*idx[:n])
        value = M.mul(value, last if n % 2 else M.inv(last))
        out.append(value)
    return NormalizedCochain(n + 1, G, M, out)


def is_cocycle(c: NormalizedCochain) -> bool:
    return delta(c).is_identity


# -- standard cyclic cochains -----------------------------------------------------


def _cyclic_domain(N: int) -> FiniteGroup:
    if N < 1:
        raise ValueError("N must be positive")
    return cyclic(N)


def std_beta(nu, N: int, coefficients: CoefficientGroup | None = None) -> NormalizedCochain:
    M = coefficients or _coefficients_for(nu)
    return NormalizedCochain.from_function(1, _cyclic_domain(N), M, lambda i: M.pow(nu, i.word[0]))


def std_lambda2(nu, N: int, coefficients: CoefficientGroup | None = None) -> NormalizedCochain:
    M = coefficients or _coefficients_for(nu)

    def value(i, j):
        return nu if i.word[0] + j.word[0] >= N else M.identity

    return NormalizedCochain.from_function(2, _cyclic_domain(N), M, value)


def std_omega3(q, N: int, coefficients: CoefficientGroup | None = None) -> NormalizedCochain:
    M = coefficients or _coefficients_for(q)

    def value(i, j, k):
        return M.pow(q, k.word[0]) if i.word[0] + j.word[0] >= N else M.identity

    return NormalizedCochain.from_function(3, _cyclic_domain(N), M, value)


def std_theta4(nu, N: int, coefficients: CoefficientGroup | None = None) -> NormalizedCochain:
    M = coefficients or _coefficients_for(nu)

    def value(i, j, k, l):
        if i.word[0] + j.word[0] >= N and k.word[0] + l.word[0] >= N:
            return nu
        return M.identity

    return NormalizedCochain.from_function(4, _cyclic_domain(N), M, value)


# -- brute-force cohomology oracle ------------------------------------------------


class _Tables:
    """Index-based view of a finite coefficient group for vectorized work."""

    def __init__(self, M: CoefficientGroup):
        self.elements = M.finite_elements()
        index = {v: i for i, v in enumerate(self.elements)}
        self.index = index
        k = len(self.elements)
        self.mul = np.array(
            [[index[M.mul(a, b)] for b in self.elements] for a in self.elements], dtype=np.int64
        ).reshape(k, k)
        self.inv = np.array([index[M.inv(a)] for a in self.elements], dtype=np.int64)
        self.identity = index[M.identity]


def _delta_plan(G: FiniteGroup, n: int):
    """Column indices and signs of each term of δ for arity-``n`` input."""
    tab = G.mul_table
    outs = list(itertools.product(range(G.order), repeat=n + 1))

    def flat(idx):
        pos = 0
        for i in idx:
            pos = pos * G.order + i
        return pos

    terms = [(np.array([flat(o[1:]) for o in outs]), +1)]
    for i in range(n):
        cols = [flat(o[:i] + (int(tab[o[i], o[i + 1]]),) + o[i + 2 :]) for o in outs]
        terms.append((np.array(cols), +1 if i % 2 else -1))
    terms.append((np.array([flat(o[:n]) for o in outs]), +1 if n % 2 else -1))
    return terms


def _apply_delta(rows: np.ndarray, plan, T: _Tables) -> np.ndarray:
    result = None
    for cols, sign in plan:
        vals = rows[:, cols]
        if sign < 0:
            vals = T.inv[vals]
        result = vals if result is None else T.mul[result, vals]
    return result


def _normalized_rows(G: FiniteGroup, n: int, T: _Tables, budget: int, start: int = 0, stop=None):
    """All normalized ``n``-cochains as index rows, optionally a slice of them."""
    free = [
        pos
        for pos, idx in enumerate(itertools.product(range(G.order), repeat=n))
        if 0 not in idx
    ]
    k = len(T.elements)
    total = k ** len(free)
    if total > budget:
        raise BudgetExceeded(f"{total} cochains exceed the budget of {budget}")
    stop = total if stop is None else min(stop, total)
    codes = np.arange(start, stop, dtype=np.int64)
    rows = np.full((len(codes), G.order**n), T.identity, dtype=np.int64)
    for j, pos in enumerate(free):
        rows[:, pos] = (codes // k**j) % k
    return rows, total


def _rows_to_cochain(row, n, G, M, T) -> NormalizedCochain:
    return NormalizedCochain(n, G, M, [T.elements[i] for i in row])


@dataclass
class CohomologyResult:
    degree: int
    class_count: int
    cocycle_count: int
    coboundary_count: int
    representatives: list[NormalizedCochain]


def enumerate_cohomology(
    n: int, G: FiniteGroup, M: CoefficientGroup, budget: int = DEFAULT_BUDGET, chunk: int = 1 << 15
) -> CohomologyResult:
    """Brute-force ``H^n(G, M)`` for trivial action.

    Every normalized ``n``-cochain is enumerated and tested for the cocycle
    condition; cocycles are then grouped by coboundary equivalence.  Each class
    is represented by its lexicographically smallest member.
    """
    if not 1 <= n <= 3:
        raise ArityTooHigh("cohomology enumeration supports degrees 1..3")
    T = _Tables(M)
    plan = _delta_plan(G, n)
    _, total = _normalized_rows(G, n, T, budget, 0, 0)
    cocycles = []
    ident_out = T.identity
    for start in range(0, total, chunk):
        rows, _ = _normalized_rows(G, n, T, budget, start, start + chunk)
        d = _apply_delta(rows, plan, T)
        cocycles.append(rows[(d == ident_out).all(axis=1)])
    Z = np.concatenate(cocycles) if cocycles else np.empty((0, G.order**n), dtype=np.int64)

    if n == 1:
        B = np.full((1, G.order), T.identity, dtype=np.int64)
    else:
        lower, _ = _normalized_rows(G, n - 1, T, budget)
        B = np.unique(_apply_delta(lower, _delta_plan(G, n - 1), T), axis=0)

    classes: dict[tuple, None] = {}
    for z in Z:
        shifted = T.mul[z[None, :], B]
        best = shifted[np.lexsort(shifted.T[::-1])[0]]
        classes.setdefault(tuple(int(x) for x in best), None)
    reps = [_rows_to_cochain(r, n, G, M, T) for r in sorted(classes)]
    return CohomologyResult(n, len(classes), len(Z), len(B), reps)


def cohomologous(
    a: NormalizedCochain, b: NormalizedCochain, budget: int = DEFAULT_BUDGET, chunk: int = 1 << 14
) -> bool:
    """Whether ``a / b`` is a coboundary, by exhausting normalized (n-1)-cochains.

    The coefficient group must be finite; roots of unity need an explicit order.
    """
    if a.arity != b.arity or a.domain is not b.domain:
        raise ValueError("cochains of different shapes")
    n, G = a.arity, a.domain
    if n < 2:
        return a == b
    M = a.coefficients
    T = _Tables(M)
    target = np.array(
        [T.index[M.mul(x, M.inv(y))] for x, y in zip(a.values, b.values)], dtype=np.int64
    )
    plan = _delta_plan(G, n - 1)
    _, total = _normalized_rows(G, n - 1, T, budget, 0, 0)
    for start in range(0, total, chunk):
        rows, _ = _normalized_rows(G, n - 1, T, budget, start, start + chunk)
        if (_apply_delta(rows, plan, T) == target).all(axis=1).any():
            return True
    return False
