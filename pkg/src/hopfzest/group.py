"""Small finite groups with exact normal forms.

Three families are supported: cyclic groups ``C_n``, direct products of
cyclic groups (elements are exponent vectors) and the metacyclic groups

    G(3, l) = < s, t | s^3 = t^(2l) = 1, t s = s^2 t >

whose elements are stored in the normal form ``s^a t^b`` with ``0 <= a < 3``
and ``0 <= b < 2l``.  Every algorithm is exhaustive; groups are capped at
:data:`MAX_ORDER` elements.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ForeignElement, GroupTooLarge, NotNormal
from .scalar import ONE, TorsionScalar, unity

__all__ = [
    "MAX_ORDER",
    "GroupElement",
    "FiniteGroup",
    "cyclic",
    "direct_product",
    "metacyclic33",
    "group_from_json",
    "Subgroup",
    "subgroup_generated",
    "center",
    "intersection",
    "QuotientGroup",
    "quotient",
    "Projection",
    "Character",
    "character_group",
    "all_characters",
    "char_eval",
    "Bicharacter",
]

MAX_ORDER = 256


@dataclass(frozen=True, order=True)
class GroupElement:
    """A normal-form word tagged with the key of its owning group."""

    key: tuple
    word: tuple[int, ...]

    def __str__(self) -> str:
        kind = self.key[0]
        if kind == "cyclic":
            return str(self.word[0])
        if kind == "metacyclic33":
            a, b = self.word
            parts = []
            if a:
                parts.append("s" if a == 1 else f"s^{a}")
            if b:
                parts.append("t" if b == 1 else f"t^{b}")
            return "".join(parts) or "1"
        return "(" + ",".join(map(str, self.word)) + ")"


class FiniteGroup:
    """A finite group from one of the supported families.

    Instances are cached, so two groups with the same parameters are the same
    object.  Use :func:`cyclic`, :func:`direct_product` or
    :func:`metacyclic33` to construct them.
    """

    def __init__(self, kind: str, params: tuple[int, ...]):
        self.kind = kind
        self.params = params
        self.key = (kind, params)
        if kind in ("cyclic", "product"):
            shape = params
        elif kind == "metacyclic33":
            shape = (3, 2 * params[0])
        else:
            raise ValueError(f"unknown group kind {kind!r}")
        if any(n < 1 for n in shape):
            raise ValueError("cyclic orders must be positive")
        self._shape = shape
        order = math.prod(shape)
        if order > MAX_ORDER:
            raise GroupTooLarge(f"group of order {order} exceeds the cap {MAX_ORDER}")
        self.order = order
        self.elements: tuple[GroupElement, ...] = tuple(
            GroupElement(self.key, w) for w in itertools.product(*(range(n) for n in shape))
        )
        self._index = {g: i for i, g in enumerate(self.elements)}
        self.identity = self.elements[0]

        table = np.empty((order, order), dtype=np.int64)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                table[i, j] = self._index[GroupElement(self.key, self._mul_words(a.word, b.word))]
        table.setflags(write=False)
        self.mul_table = table
        inv = np.empty(order, dtype=np.int64)
        for i in range(order):
            inv[i] = int(np.flatnonzero(table[i] == 0)[0])
        inv.setflags(write=False)
        self.inv_table = inv

        if kind == "metacyclic33":
            self.generators = (self.element(1, 0), self.element(0, 1))
        else:
            self.generators = tuple(
                self.element(*(int(i == j) for i in range(len(shape)))) for j in range(len(shape))
            )

    # -- construction helpers -------------------------------------------------

    def _mul_words(self, a, b):
        if self.kind == "metacyclic33":
            # s^a t^b s^c t^d = s^(a + c 2^b) t^(b + d)
            (x, y), (u, v) = a, b
            twist = 1 if y % 2 == 0 else 2
            return ((x + u * twist) % 3, (y + v) % self._shape[1])
        return tuple((x + y) % n for x, y, n in zip(a, b, self._shape))

    def element(self, *word) -> GroupElement:
        """Build an element from a (not necessarily reduced) word."""
        if len(word) == 1 and isinstance(word[0], (tuple, list)):
            word = tuple(word[0])
        if len(word) != len(self._shape):
            raise ValueError(f"{self}: expected a word of length {len(self._shape)}, got {word!r}")
        return GroupElement(self.key, tuple(int(x) % n for x, n in zip(word, self._shape)))

    def s(self) -> GroupElement:
        self._require_metacyclic()
        return self.generators[0]

    def t(self) -> GroupElement:
        self._require_metacyclic()
        return self.generators[1]

    def _require_metacyclic(self):
        if self.kind != "metacyclic33":
            raise AttributeError("s and t exist only in metacyclic33 groups")

    # -- arithmetic -----------------------------------------------------------

    def index(self, g: GroupElement) -> int:
        try:
            return self._index[g]
        except (KeyError, TypeError):
            raise ForeignElement(f"{g!r} is not an element of {self}") from None

    def check(self, g: GroupElement) -> GroupElement:
        self.index(g)
        return g

    def __contains__(self, g) -> bool:
        return isinstance(g, GroupElement) and g in self._index

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.elements[self.mul_table[self.index(a), self.index(b)]]

    def prod(self, *elements: GroupElement) -> GroupElement:
        out = self.identity
        for g in elements:
            out = self.mul(out, g)
        return out

    def inv(self, a: GroupElement) -> GroupElement:
        return self.elements[self.inv_table[self.index(a)]]

    def pow(self, a: GroupElement, k: int) -> GroupElement:
        if k < 0:
            a, k = self.inv(a), -k
        out = self.identity
        for _ in range(k % self.element_order(a)):
            out = self.mul(out, a)
        return out

    def conj(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """``g h g^-1``."""
        return self.prod(g, h, self.inv(g))

    def element_order(self, a: GroupElement) -> int:
        i = self.index(a)
        k, x = 1, i
        while x != 0:
            x = self.mul_table[x, i]
            k += 1
        return k

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul_table, self.mul_table.T))

    @property
    def cyclic_orders(self) -> tuple[int, ...]:
        """Orders of the generators in the abelianization."""
        if self.kind == "metacyclic33":
            return (1, 2 * self.params[0])
        return self._shape

    # -- serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        if self.kind == "cyclic":
            return {"type": "cyclic", "n": self.params[0]}
        if self.kind == "product":
            return {"type": "product", "orders": list(self.params)}
        return {"type": "metacyclic33", "ell": self.params[0]}

    def element_to_json(self, g: GroupElement):
        self.index(g)
        if self.kind == "metacyclic33":
            return {"s": g.word[0], "t": g.word[1]}
        return list(g.word)

    def element_from_json(self, obj) -> GroupElement:
        if self.kind == "metacyclic33":
            if isinstance(obj, dict):
                return self.element(obj.get("s", 0), obj.get("t", 0))
            return self.element(*obj)
        if isinstance(obj, int):
            return self.element(obj)
        return self.element(*obj)

    def __repr__(self) -> str:
        if self.kind == "cyclic":
            return f"C{self.params[0]}"
        if self.kind == "product":
            return "×".join(f"C{n}" for n in self.params)
        return f"G(3,{self.params[0]})"

    def __reduce__(self):
        return (_cached_group, (self.kind, self.params))


@lru_cache(maxsize=None)
def _cached_group(kind: str, params: tuple[int, ...]) -> FiniteGroup:
    return FiniteGroup(kind, params)


def cyclic(n: int) -> FiniteGroup:
    return _cached_group("cyclic", (int(n),))


def direct_product(orders) -> FiniteGroup:
    return _cached_group("product", tuple(int(n) for n in orders))


def metacyclic33(ell: int) -> FiniteGroup:
    if ell < 1:
        raise ValueError("ell must be positive")
    return _cached_group("metacyclic33", (int(ell),))


def group_from_json(obj: dict) -> FiniteGroup:
    kind = obj.get("type")
    if kind == "cyclic":
        return cyclic(obj["n"])
    if kind == "product":
        return direct_product(obj["orders"])
    if kind == "metacyclic33":
        return metacyclic33(obj["ell"])
    raise ValueError(f"unknown group type {kind!r}")


# -- subgroups ----------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[GroupElement, ...]
    generators: tuple[GroupElement, ...] = field(compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def _members(self) -> frozenset:
        members = self.__dict__.get("_members_cache")
        if members is None:
            members = frozenset(self.elements)
            object.__setattr__(self, "_members_cache", members)
        return members

    def is_normal(self) -> bool:
        return self.non_normal_witness() is None

    def non_normal_witness(self):
        G = self.parent
        for g in G.elements:
            for n in self.generators:
                if G.conj(g, n) not in self:
                    return g, n
        return None

    def is_central(self) -> bool:
        G = self.parent
        return all(G.mul(z, g) == G.mul(g, z) for z in self.generators for g in G.generators)

    def is_abelian(self) -> bool:
        G = self.parent
        return all(G.mul(a, b) == G.mul(b, a) for a in self.generators for b in self.generators)

    def issubset(self, other: Subgroup) -> bool:
        return all(g in other for g in self.elements)

    def __repr__(self) -> str:
        gens = ", ".join(map(str, self.generators))
        return f"<{gens}> ≤ {self.parent!r} (order {self.order})"


def _closure(G: FiniteGroup, gens) -> set[int]:
    gens = [G.index(g) for g in gens]
    seen = {0}
    todo = deque([0])
    while todo:
        x = todo.popleft()
        for g in gens:
            y = int(G.mul_table[x, g])
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def subgroup_generated(G: FiniteGroup, gens) -> Subgroup:
    """Smallest subgroup containing ``gens``; generator order is preserved."""
    gens = list(gens)
    for g in gens:
        G.check(g)
    kept = []
    for g in gens:
        if g != G.identity and g not in kept:
            kept.append(g)
    members = sorted(_closure(G, kept))
    return Subgroup(G, tuple(G.elements[i] for i in members), tuple(kept))


def _subgroup_from_members(G: FiniteGroup, members) -> Subgroup:
    """Wrap a subgroup given by its elements, choosing small generators greedily."""
    members = sorted(members, key=G.index)
    candidates = sorted(members, key=lambda g: (-G.element_order(g), G.index(g)))
    gens: list[GroupElement] = []
    span = {0}
    for g in candidates:
        if len(span) == len(members):
            break
        if G.index(g) not in span:
            gens.append(g)
            span = _closure(G, gens)
    return Subgroup(G, tuple(members), tuple(gens))


def center(G: FiniteGroup) -> Subgroup:
    members = [z for z in G.elements if all(G.mul(z, g) == G.mul(g, z) for g in G.generators)]
    return _subgroup_from_members(G, members)


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    if A.parent is not B.parent:
        raise ForeignElement("subgroups of different groups")
    return _subgroup_from_members(A.parent, [g for g in A.elements if g in B])


# -- quotients ----------------------------------------------------------------


class QuotientGroup:
    """``G / N`` with canonical coset representatives.

    The representative of a coset is its smallest element in canonical order.
    When the quotient is abelian it is also identified with a product of
    cyclic groups, exposed as :attr:`group` with :meth:`project`/:meth:`lift`.
    """

    def __init__(self, parent: FiniteGroup, normal: Subgroup):
        self.parent = parent
        self.normal = normal
        coset_of = np.full(parent.order, -1, dtype=np.int64)
        reps = []
        for i, g in enumerate(parent.elements):
            if coset_of[i] >= 0:
                continue
            c = len(reps)
            reps.append(g)
            for n in normal.elements:
                coset_of[parent.index(parent.mul(g, n))] = c
        coset_of.setflags(write=False)
        self.coset_of = coset_of
        self.representatives: tuple[GroupElement, ...] = tuple(reps)
        self.order = len(reps)
        rep_idx = [parent.index(r) for r in reps]
        self.table = np.array(
            [[coset_of[parent.mul_table[a, b]] for b in rep_idx] for a in rep_idx], dtype=np.int64
        ).reshape(self.order, self.order)
        self.is_abelian = bool(np.array_equal(self.table, self.table.T))
        self.group: FiniteGroup | None = None
        self.decomposition: tuple[int, ...] | None = None
        if self.is_abelian:
            self._decompose()

    def coset(self, g: GroupElement) -> int:
        return int(self.coset_of[self.parent.index(g)])

    def _decompose(self):
        basis = _cyclic_basis(self.table)
        orders = tuple(o for _, o in basis)
        if not orders:
            target = cyclic(1)
        elif len(orders) == 1:
            target = cyclic(orders[0])
        else:
            target = direct_product(orders)
        to_target = np.empty(self.order, dtype=np.int64)
        for word in itertools.product(*(range(o) for o in orders)):
            c = 0
            for (x, _), e in zip(basis, word):
                for _ in range(e):
                    c = self.table[c, x]
            to_target[c] = target.index(target.element(*word)) if word else 0
        self.group = target
        self.decomposition = orders if orders else (1,)
        self._to_target = to_target
        self._from_target = np.argsort(to_target)

    def _require_abelian(self):
        if self.group is None:
            raise ValueError(f"{self.parent!r}/{self.normal!r} is not abelian")

    def project(self, g: GroupElement) -> GroupElement:
        """Image of ``g`` in the cyclic decomposition :attr:`group`."""
        self._require_abelian()
        return self.group.elements[self._to_target[self.coset(g)]]

    def lift(self, x: GroupElement) -> GroupElement:
        self._require_abelian()
        return self.representatives[self._from_target[self.group.index(x)]]

    def projection(self) -> Projection:
        self._require_abelian()
        image = np.array([self._to_target[c] for c in self.coset_of], dtype=np.int64)
        return Projection(self.parent, self.group, image)

    def __repr__(self) -> str:
        shape = "×".join(f"C{n}" for n in self.decomposition) if self.decomposition else "nonabelian"
        return f"{self.parent!r}/{self.normal!r} ≅ {shape}"


def _cyclic_basis(table: np.ndarray) -> list[tuple[int, int]]:
    """Elements ``x_1..x_r`` of an abelian group table with ``A = <x_1> × ... × <x_r>``."""
    k = len(table)

    def order_of(x):
        n, y = 1, x
        while y != 0:
            y = table[y, x]
            n += 1
        return n

    def span(gens):
        seen = {0}
        todo = [0]
        while todo:
            y = todo.pop()
            for g in gens:
                z = int(table[y, g])
                if z not in seen:
                    seen.add(z)
                    todo.append(z)
        return seen

    orders = [order_of(x) for x in range(k)]
    candidates = sorted(range(1, k), key=lambda x: (-orders[x], x))

    def search(chosen, size):
        if size == k:
            return chosen
        for x in candidates:
            new = span(chosen + [x])
            if len(new) == size * orders[x]:
                found = search(chosen + [x], len(new))
                if found is not None:
                    return found
        return None

    basis = search([], 1)
    assert basis is not None, "finite abelian groups always decompose"
    return [(x, orders[x]) for x in basis]


def quotient(G: FiniteGroup, N: Subgroup) -> QuotientGroup:
    if N.parent is not G:
        raise ForeignElement("subgroup of a different group")
    witness = N.non_normal_witness()
    if witness is not None:
        g, n = witness
        raise NotNormal(f"{g} {n} {g}^-1 is not in {N!r}")
    return QuotientGroup(G, N)


class Projection:
    """A surjective homomorphism from a group onto a product of cyclic groups.

    ``image[i]`` is the index in ``target`` of the image of the ``i``-th
    source element.  The section sends each target element to the smallest
    element of its fiber.
    """

    def __init__(self, source: FiniteGroup, target: FiniteGroup, image: np.ndarray):
        image = np.asarray(image, dtype=np.int64)
        image.setflags(write=False)
        self.source = source
        self.target = target
        self.image = image
        section = np.full(target.order, -1, dtype=np.int64)
        for i in range(source.order - 1, -1, -1):
            section[image[i]] = i
        if (section < 0).any():
            raise ValueError("projection is not surjective")
        self.section_index = section
        self.kernel = _subgroup_from_members(
            source, [g for i, g in enumerate(source.elements) if image[i] == 0]
        )

    def __call__(self, g: GroupElement) -> GroupElement:
        return self.target.elements[self.image[self.source.index(g)]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Projection):
            return NotImplemented
        return (
            self.source is other.source
            and self.target is other.target
            and np.array_equal(self.image, other.image)
        )

    def __hash__(self) -> int:
        return hash((self.source.key, self.target.key, self.image.tobytes()))

    def lift(self, x: GroupElement) -> GroupElement:
        return self.source.elements[self.section_index[self.target.index(x)]]

    def fiber(self, x: GroupElement) -> list[GroupElement]:
        j = self.target.index(x)
        return [g for i, g in enumerate(self.source.elements) if self.image[i] == j]

    def compose(self, kernel: Subgroup) -> Projection:
        """Follow this projection by the quotient of the target by ``kernel``."""
        Q = quotient(self.target, kernel)
        further = Q.projection()
        return Projection(self.source, further.target, further.image[self.image])

    def is_homomorphism(self) -> bool:
        S, T = self.source, self.target
        lhs = self.image[S.mul_table]
        rhs = T.mul_table[self.image[:, None], self.image[None, :]]
        return bool(np.array_equal(lhs, rhs))


# -- characters -----------------------------------------------------------------


@dataclass(frozen=True)
class Character:
    """A linear character, given by its values on the canonical generators."""

    group: FiniteGroup
    values: tuple[TorsionScalar, ...]

    def __post_init__(self):
        G = self.group
        if len(self.values) != len(G.generators):
            raise ValueError("one value per generator is required")
        for v, n in zip(self.values, G.cyclic_orders):
            if v.is_zero or n % v.order:
                raise ValueError(f"{v} is not a valid character value on a generator of order {n}")

    def __call__(self, g: GroupElement) -> TorsionScalar:
        self.group.check(g)
        return TorsionScalar(sum((v.exponent * e for v, e in zip(self.values, g.word)), Fraction(0)))

    def __mul__(self, other: Character) -> Character:
        if other.group is not self.group:
            raise ForeignElement("characters of different groups")
        return Character(self.group, tuple(a * b for a, b in zip(self.values, other.values)))

    def __pow__(self, k: int) -> Character:
        return Character(self.group, tuple(v**k for v in self.values))

    def inverse(self) -> Character:
        return self**-1

    @property
    def is_trivial(self) -> bool:
        return all(v == ONE for v in self.values)

    def exponents(self) -> tuple[int, ...]:
        """Coordinates with respect to :func:`character_group`."""
        G = self.group
        if G.kind == "metacyclic33":
            return (int(self.values[1].exponent * 2 * G.params[0]),)
        return tuple(int(v.exponent * n) for v, n in zip(self.values, G.cyclic_orders))

    @classmethod
    def from_exponents(cls, G: FiniteGroup, exps) -> Character:
        exps = tuple(int(e) for e in exps)
        if G.kind == "metacyclic33":
            (w,) = exps
            return cls(G, (ONE, unity(w, 2 * G.params[0])))
        return cls(G, tuple(unity(e, n) for e, n in zip(exps, G.cyclic_orders)))

    def __str__(self) -> str:
        return "χ" + str(list(self.exponents()))


def _dual_orders(G: FiniteGroup) -> tuple[int, ...]:
    if G.kind == "metacyclic33":
        return (2 * G.params[0],)
    return G.cyclic_orders


def character_group(G: FiniteGroup) -> list[Character]:
    """Generators of the character group, dual to the canonical generators."""
    gens = []
    for j in range(len(_dual_orders(G))):
        gens.append(Character.from_exponents(G, [int(i == j) for i in range(len(_dual_orders(G)))]))
    return gens


def all_characters(G: FiniteGroup) -> list[Character]:
    """Every linear character, ordered lexicographically by exponent vector."""
    return [Character.from_exponents(G, e) for e in itertools.product(*(range(n) for n in _dual_orders(G)))]


def char_eval(chi: Character, g: GroupElement) -> TorsionScalar:
    return chi(g)


@dataclass(frozen=True)
class Bicharacter:
    """A map ``G × G → μ_∞`` multiplicative in each slot, given on generator pairs."""

    group: FiniteGroup
    table: tuple[tuple[TorsionScalar, ...], ...]

    def __post_init__(self):
        orders = self.group.cyclic_orders
        k = len(orders)
        if len(self.table) != k or any(len(row) != k for row in self.table):
            raise ValueError("bicharacter table must be square over the generators")
        for j, row in enumerate(self.table):
            for l, v in enumerate(row):
                if v.is_zero or orders[j] % v.order or orders[l] % v.order:
                    raise ValueError(f"entry ({j},{l}) = {v} is incompatible with generator orders")

    def __call__(self, g: GroupElement, h: GroupElement) -> TorsionScalar:
        self.group.check(g)
        self.group.check(h)
        e = Fraction(0)
        for j, a in enumerate(g.word):
            for l, b in enumerate(h.word):
                e += self.table[j][l].exponent * a * b
        return TorsionScalar(e)

    def to_json(self) -> list:
        return [[v.to_json() for v in row] for row in self.table]

    @classmethod
    def from_json(cls, G: FiniteGroup, obj) -> Bicharacter:
        return cls(G, tuple(tuple(TorsionScalar.from_json(v) for v in row) for row in obj))
