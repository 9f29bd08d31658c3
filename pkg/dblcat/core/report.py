"""Structured verdicts shared by every validator and cross-check."""
from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

from dblcat.types import Id

__all__ = ["Violation", "Report"]


@dataclass(frozen=True)
class Violation:
    axiom: str
    ids: Tuple[Id, ...] = ()

    def __str__(self):
        return "{}: {}".format(self.axiom, ", ".join(repr(i) for i in self.ids))


@dataclass
class Report:
    """``ok`` holds exactly when no violation was recorded."""

    name: str = ""
    violations: List[Violation] = field(default_factory=list)
    witness: Optional[Any] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, axiom: str, *ids: Id) -> "Report":
        self.violations.append(Violation(axiom, tuple(ids)))
        return self

    def check(self, condition: bool, axiom: str, *ids: Id) -> bool:
        if not condition:
            self.fail(axiom, *ids)
        return condition

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for v in other.violations:
            axiom = "{}: {}".format(prefix, v.axiom) if prefix else v.axiom
            self.violations.append(Violation(axiom, v.ids))
        return self

    @property
    def axioms(self) -> Tuple[str, ...]:
        """Distinct violated axiom tags, in first-seen order."""
        seen: List[str] = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return tuple(seen)

    def __str__(self):
        if self.ok:
            return "{}: ok".format(self.name or "report")
        lines = ["{}: {} violation(s)".format(self.name or "report",
                                              len(self.violations))]
        lines.extend("  " + str(v) for v in self.violations)
        return "\n".join(lines)
