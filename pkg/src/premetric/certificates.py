"""Certificate value types shared across the library.

Numeric claims are never bare booleans here: a distance estimate is an
:class:`Interval` of exact rational bounds, a relation query on the completion
is answered by a :class:`ThreeValued` verdict (the exact boundary is only
semi-decidable), and a batch of axiom or invariant checks comes back as a
:class:`Report` whose failures always carry a reproducible counterexample.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional

from .rationals import rat_format


@dataclass(frozen=True)
class Interval:
    """Exact rational bounds lo <= value <= hi on a distance value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo < 0:
            raise ValueError(f"negative lower bound: {rat_format(self.lo)}")
        if self.lo > self.hi:
            raise ValueError(
                f"empty interval: lo={rat_format(self.lo)} > hi={rat_format(self.hi)}"
            )

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi

    def overlaps(self, other: "Interval", slack: Fraction = Fraction(0)) -> bool:
        """Whether the two intervals meet, each widened by ``slack``."""
        return self.lo - slack <= other.hi and other.lo - slack <= self.hi

    def __str__(self) -> str:
        return f"[{rat_format(self.lo)}, {rat_format(self.hi)}]"


@dataclass(frozen=True)
class ThreeValued:
    """Yes / No are sound certificates; Unknown records the precision at
    which the query was left undecided."""

    verdict: str
    precision: Optional[Fraction] = None

    @property
    def is_yes(self) -> bool:
        return self.verdict == "yes"

    @property
    def is_no(self) -> bool:
        return self.verdict == "no"

    @property
    def is_unknown(self) -> bool:
        return self.verdict == "unknown"

    def __str__(self) -> str:
        if self.is_unknown and self.precision is not None:
            return f"unknown@{rat_format(self.precision)}"
        return self.verdict


YES = ThreeValued("yes")
NO = ThreeValued("no")


def unknown(precision: Fraction) -> ThreeValued:
    return ThreeValued("unknown", precision)


@dataclass(frozen=True)
class Check:
    """One named pass/fail result; failures carry counterexample data."""

    name: str
    passed: bool
    witness: Optional[Mapping[str, Any]] = None


@dataclass(frozen=True)
class Report:
    """An order-independent bundle of checks (assembled sorted by name)."""

    checks: tuple[Check, ...]

    @staticmethod
    def assemble(checks: Iterable[Check]) -> "Report":
        return Report(tuple(sorted(checks, key=lambda c: c.name)))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def n_passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def n_failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    def failures(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def render_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.name}"
            if c.witness:
                parts = ", ".join(f"{k}={_show(v)}" for k, v in c.witness.items())
                line += f"  [{parts}]"
            lines.append(line)
        lines.append(f"summary: {self.n_passed} passed, {self.n_failed} failed")
        return "\n".join(lines)

    def to_json(self) -> str:
        payload = {
            "checks": [
                {
                    "name": c.name,
                    "status": "pass" if c.passed else "fail",
                    "witness": _jsonify(c.witness),
                }
                for c in self.checks
            ],
            "summary": {"pass": self.n_passed, "fail": self.n_failed},
        }
        return json.dumps(payload, indent=2)


def _show(value: Any) -> str:
    if isinstance(value, Fraction):
        return rat_format(value)
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(_show(v) for v in value) + ")"
    return str(value)


def _jsonify(value: Any) -> Any:
    if value is None:
        return None
    if isinstance(value, Fraction):
        return rat_format(value)
    if isinstance(value, (tuple, list)):
        return [_jsonify(v) for v in value]
    if isinstance(value, Mapping):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (str, int, bool)):
        return value
    return str(value)
