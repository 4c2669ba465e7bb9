"""Exact arithmetic on ``{0} ∪ {roots of unity}``.

A nonzero value is stored as its exponent ``a/b`` in ``[0, 1)``, standing for
``exp(2πi a/b)``.  Multiplication is addition of exponents mod 1, so all
comparisons are exact and cheap.  No scalar addition is ever needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroHasNoRoots, ZeroToNonpositivePower

__all__ = [
    "TorsionScalar",
    "ZERO",
    "ONE",
    "unity",
    "zeta",
    "ts_mul",
    "ts_pow",
    "ts_nth_roots",
    "common_denominator",
]


@dataclass(frozen=True)
class TorsionScalar:
    """Zero or a root of unity.

    ``exponent is None`` encodes zero; otherwise ``exponent`` is a reduced
    :class:`~fractions.Fraction` in ``[0, 1)``.
    """

    exponent: Fraction | None

    def __post_init__(self):
        if self.exponent is not None:
            object.__setattr__(self, "exponent", Fraction(self.exponent) % 1)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    @property
    def num(self) -> int:
        return self._unity_exponent().numerator

    @property
    def den(self) -> int:
        return self._unity_exponent().denominator

    @property
    def order(self) -> int:
        """Multiplicative order (the reduced denominator)."""
        return self.den

    def _unity_exponent(self) -> Fraction:
        if self.exponent is None:
            raise ValueError("zero has no exponent")
        return self.exponent

    def __mul__(self, other: TorsionScalar) -> TorsionScalar:
        if not isinstance(other, TorsionScalar):
            return NotImplemented
        if self.exponent is None or other.exponent is None:
            return ZERO
        return TorsionScalar(self.exponent + other.exponent)

    def __pow__(self, k: int) -> TorsionScalar:
        k = int(k)
        if self.exponent is None:
            if k <= 0:
                raise ZeroToNonpositivePower(f"0 ** {k}")
            return ZERO
        return TorsionScalar(self.exponent * k)

    def inverse(self) -> TorsionScalar:
        return self ** -1

    def __truediv__(self, other: TorsionScalar) -> TorsionScalar:
        if not isinstance(other, TorsionScalar):
            return NotImplemented
        return self * other.inverse()

    def nth_roots(self, n: int) -> list[TorsionScalar]:
        return ts_nth_roots(self, n)

    def sort_key(self) -> tuple:
        return (0, Fraction(0)) if self.exponent is None else (1, self.exponent)

    def __lt__(self, other: TorsionScalar) -> bool:
        return self.sort_key() < other.sort_key()

    def to_json(self) -> dict:
        if self.exponent is None:
            return {"kind": "zero"}
        return {"kind": "unity", "num": self.num, "den": self.den}

    @classmethod
    def from_json(cls, obj: dict) -> TorsionScalar:
        kind = obj.get("kind")
        if kind == "zero":
            return ZERO
        if kind == "unity":
            return unity(int(obj["num"]), int(obj["den"]))
        raise ValueError(f"unknown scalar kind {kind!r}")

    def __repr__(self) -> str:
        if self.exponent is None:
            return "TorsionScalar(0)"
        return f"TorsionScalar({self.num}/{self.den})"

    def __str__(self) -> str:
        if self.exponent is None:
            return "0"
        names = {Fraction(0): "1", Fraction(1, 2): "-1", Fraction(1, 4): "i", Fraction(3, 4): "-i"}
        if self.exponent in names:
            return names[self.exponent]
        if self.num == 1:
            return f"ζ{self.den}"
        return f"ζ{self.den}^{self.num}"


ZERO = TorsionScalar(None)
ONE = TorsionScalar(Fraction(0))


def unity(num: int, den: int = 1) -> TorsionScalar:
    """``exp(2πi num/den)``; the fraction need not be reduced."""
    if den < 1:
        raise ValueError("denominator must be positive")
    return TorsionScalar(Fraction(num, den))


def zeta(n: int, k: int = 1) -> TorsionScalar:
    """The primitive ``n``-th root ``exp(2πi/n)`` raised to ``k``."""
    return unity(k, n)


def ts_mul(a: TorsionScalar, b: TorsionScalar) -> TorsionScalar:
    return a * b


def ts_pow(a: TorsionScalar, k: int) -> TorsionScalar:
    return a**k


def ts_nth_roots(m: TorsionScalar, n: int) -> list[TorsionScalar]:
    """All ``n`` solutions of ``q**n == m``, in ascending exponent order."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if m.exponent is None:
        raise ZeroHasNoRoots("0 has no roots of unity as n-th roots")
    base = m.exponent / n
    roots = {TorsionScalar(base + Fraction(j, n)) for j in range(n)}
    return sorted(roots)


def common_denominator(values) -> int:
    """Least common multiple of the orders of the given nonzero scalars."""
    d = 1
    for v in values:
        d = math.lcm(d, v.den)
    return d
