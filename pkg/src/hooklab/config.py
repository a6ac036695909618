"""Run configurations for the experiment scripts."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .identities import BUILTINS, default_jobs


@dataclass(frozen=True)
class SweepConfig:
    """Verify each identity at every order in ``orders``."""

    identities: tuple[str, ...] = tuple(BUILTINS)
    orders: tuple[int, ...] = (10, 20, 30)
    jobs: int = field(default_factory=default_jobs)

    def __post_init__(self):
        unknown = [n for n in self.identities if n not in BUILTINS]
        if unknown:
            raise ValueError(f"unknown identities: {unknown}")
        if not self.orders or min(self.orders) < 1:
            raise ValueError("orders must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class TableConfig:
    rows: int = 12
    hook_table_max: int = 4

    def __post_init__(self):
        if self.rows < 1 or self.hook_table_max < 0:
            raise ValueError("rows must be >= 1 and hook_table_max >= 0")
