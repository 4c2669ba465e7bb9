"""Verification reports: an ordered list of named pass/fail rows."""

from __future__ import annotations

from dataclasses import dataclass, field

from .group import GroupElement
from .scalar import TorsionScalar

__all__ = ["Counterexample", "CheckResult", "VerificationReport"]


def _value_to_json(v):
    if isinstance(v, TorsionScalar):
        return v.to_json()
    if isinstance(v, GroupElement):
        return {"element": str(v)}
    return {"text": str(v)}


def _value_from_json(obj):
    if "kind" in obj:
        return TorsionScalar.from_json(obj)
    if "element" in obj:
        return obj["element"]
    return obj["text"]


@dataclass(frozen=True)
class Counterexample:
    """The first failing argument tuple of a check, with both sides evaluated."""

    args: tuple
    lhs: object
    rhs: object

    def to_json(self) -> dict:
        return {
            "args": [str(a) for a in self.args],
            "lhs": _value_to_json(self.lhs),
            "rhs": _value_to_json(self.rhs),
        }

    @classmethod
    def from_json(cls, obj: dict) -> Counterexample:
        return cls(tuple(obj["args"]), _value_from_json(obj["lhs"]), _value_from_json(obj["rhs"]))

    def __str__(self) -> str:
        return f"at ({', '.join(str(a) for a in self.args)}): lhs = {self.lhs}, rhs = {self.rhs}"


@dataclass
class CheckResult:
    name: str
    passed: bool
    counterexample: Counterexample | None = None
    note: str = ""
    checked: int = 0

    def to_json(self) -> dict:
        out = {"check": self.name, "pass": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, obj: dict) -> CheckResult:
        cx = obj.get("counterexample")
        return cls(
            obj["check"],
            bool(obj["pass"]),
            Counterexample.from_json(cx) if cx else None,
            obj.get("note", ""),
            int(obj.get("checked", 0)),
        )

    def __str__(self) -> str:
        line = f"{'PASS' if self.passed else 'FAIL'}  {self.name}"
        if self.counterexample is not None:
            line += f"  {self.counterexample}"
        if self.note:
            line += f"  [{self.note}]"
        return line


@dataclass
class VerificationReport:
    title: str
    rows: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.rows if not r.passed]

    def row(self, name: str) -> CheckResult:
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)

    def names(self) -> list[str]:
        return [r.name for r in self.rows]

    def extend(self, other: VerificationReport) -> VerificationReport:
        self.rows.extend(other.rows)
        return self

    def to_json(self) -> dict:
        return {"title": self.title, "pass": self.passed, "checks": [r.to_json() for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> VerificationReport:
        return cls(obj["title"], [CheckResult.from_json(r) for r in obj["checks"]])

    def to_text(self) -> str:
        lines = [self.title] + ["  " + str(r) for r in self.rows]
        ok = sum(r.passed for r in self.rows)
        lines.append(f"  {ok}/{len(self.rows)} checks passed")
        return "\n".join(lines)
