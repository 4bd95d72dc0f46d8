"""Verification reports shared by the certificate, code, and packing checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


@dataclass(frozen=True)
class Violation:
    """One failed condition: indices, a condition id, and the witness value."""

    i: int
    j: int | None
    condition: str
    value: object

    def as_dict(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "condition": self.condition,
            "value": str(self.value),
        }


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a verifier; accepted exactly when no violations were found.

    `numeric` marks acceptance established only at float precision (margin
    comparisons) rather than by exact rational arithmetic.
    """

    accepted: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)
    numeric: bool = False

    def __post_init__(self):
        if self.accepted != (len(self.violations) == 0):
            raise ValueError("accepted flag must match emptiness of violations")

    @classmethod
    def from_violations(
        cls, violations: Sequence[Violation], numeric: bool = False
    ) -> "VerificationReport":
        vs = tuple(violations)
        return cls(accepted=not vs, violations=vs, numeric=numeric)

    def as_dict(self) -> dict:
        return {
            "accepted": self.accepted,
            "numeric": self.numeric,
            "violations": [v.as_dict() for v in self.violations],
        }
