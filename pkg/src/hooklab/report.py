"""Result records shared by the verification routines and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .arith import Poly


@dataclass
class Failure:
    q_order: int
    lhs: Poly
    rhs: Poly

    @property
    def delta(self) -> Poly:
        return self.lhs - self.rhs

    def to_json(self) -> dict:
        return {
            "q_order": self.q_order,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "delta": self.delta.to_json(),
        }


@dataclass
class VerificationReport:
    identity: str
    order: int
    first_failure: Optional[Failure] = None
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self, timing: bool = True) -> dict:
        return {
            "identity": self.identity,
            "order": self.order,
            "status": self.status,
            "first_failure": None if self.first_failure is None else self.first_failure.to_json(),
            "elapsed_ms": self.elapsed_ms if timing else 0,
        }

    def text(self, timing: bool = True) -> str:
        head = f"{self.status.upper()} {self.identity} order={self.order}"
        if timing:
            head += f" ({self.elapsed_ms} ms)"
        f = self.first_failure
        if f is None:
            return head
        return (f"{head}\n  first failure at q^{f.q_order}\n"
                f"  lhs:   {f.lhs}\n  rhs:   {f.rhs}\n  delta: {f.delta}")


@dataclass
class CheckResult:
    """Outcome of a cross-check that is not a two-sided series identity."""

    name: str
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {"check": self.name, "status": self.status, "detail": self.detail}

    def text(self) -> str:
        return f"{self.status.upper()} {self.name}"


def first_difference(order: int, lhs, rhs, start: int = 0) -> Optional[Failure]:
    """First index ``n`` in ``start..order`` where the two coefficient lists differ."""
    for n in range(start, order + 1):
        a, b = lhs[n], rhs[n]
        if not isinstance(a, Poly):
            a = Poly.const(a)
        if not isinstance(b, Poly):
            b = Poly.const(b)
        if a != b:
            return Failure(n, a, b)
    return None
