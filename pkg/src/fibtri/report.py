"""Verification records shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable


@dataclass(frozen=True)
class Counterexample:
    where: tuple
    lhs: Any = None
    rhs: Any = None
    note: str = ""

    def __str__(self) -> str:
        if self.note and self.lhs is None:
            return f"{self.where}: {self.note}"
        text = f"{self.where}: lhs={self.lhs} rhs={self.rhs}"
        return f"{text} ({self.note})" if self.note else text


@dataclass
class IdentityCheck:
    """Outcome of one identity sweep; passes iff no counterexamples were found."""

    id: str
    domain: str
    checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "domain": self.domain,
            "checked": self.checked,
            "status": self.status,
            "counterexamples": [
                {
                    "where": list(c.where),
                    "lhs": None if c.lhs is None else str(c.lhs),
                    "rhs": None if c.rhs is None else str(c.rhs),
                    "note": c.note,
                }
                for c in self.counterexamples
            ],
        }


# validate_spec and the identity checkers share one record type.
VerificationReport = IdentityCheck


def sweep(
    check_id: str,
    domain: str,
    points: Iterable[tuple],
    lhs: Callable[..., Any],
    rhs: Callable[..., Any],
) -> IdentityCheck:
    """Compare ``lhs(*p)`` with ``rhs(*p)`` at every point and collect mismatches."""
    check = IdentityCheck(check_id, domain)
    for p in points:
        a, b = lhs(*p), rhs(*p)
        check.checked += 1
        if a != b:
            check.counterexamples.append(Counterexample(tuple(p), a, b))
    return check
