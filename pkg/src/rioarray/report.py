"""Structured pass/fail reports shared by the Sheffer checks and the identity engine."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Optional, Tuple


@dataclass(frozen=True)
class Failure:
    n: int
    k: Optional[int]
    lhs: Any
    rhs: Any

    def as_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "k": self.k, "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass(frozen=True)
class IdentityReport:
    name: str
    depth: int
    params: Dict[str, Any] = field(default_factory=dict)
    first_failure: Optional[Failure] = None
    checked: int = 0

    @property
    def status(self) -> str:
        return "pass" if self.first_failure is None else "fail"

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "depth": self.depth,
            "params": {k: str(v) for k, v in self.params.items()},
            "status": self.status,
            "checked": self.checked,
            "first_failure": None if self.first_failure is None else self.first_failure.as_dict(),
        }

    def line(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = f"{self.status.upper():4} {self.name} depth={self.depth}" + (f" {ps}" if ps else "")
        if self.first_failure is not None:
            f = self.first_failure
            at = f"n={f.n}" if f.k is None else f"n={f.n} k={f.k}"
            head += f"  first failure at {at}: lhs={f.lhs} rhs={f.rhs}"
        return head


def compare(name: str, depth: int, cases: Iterable[Tuple[int, Optional[int], Any, Any]],
            **params) -> IdentityReport:
    """Consume ``(n, k, lhs, rhs)`` tuples in lexicographic order; stop at the first mismatch."""
    count = 0
    for n, k, lhs, rhs in cases:
        count += 1
        if lhs != rhs:
            return IdentityReport(name, depth, params, Failure(n, k, lhs, rhs), count)
    return IdentityReport(name, depth, params, None, count)
