from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BudgetExhausted


@dataclass(frozen=True)
class Budget:
    """Search cap: a node count and a wall-clock limit, either may be ``None``."""

    max_nodes: int | None = None
    max_seconds: float | None = None

    def start(self) -> BudgetMeter:
        return BudgetMeter(self)


UNLIMITED = Budget()


class BudgetMeter:
    __slots__ = ("budget", "nodes", "deadline")

    def __init__(self, budget: Budget | None) -> None:
        self.budget = budget or UNLIMITED
        self.nodes = 0
        secs = self.budget.max_seconds
        self.deadline = time.monotonic() + secs if secs is not None else None

    def tick(self) -> None:
        self.nodes += 1
        cap = self.budget.max_nodes
        if cap is not None and self.nodes > cap:
            raise BudgetExhausted(f"node budget {cap} exhausted")
        if self.deadline is not None and not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise BudgetExhausted(f"time budget {self.budget.max_seconds}s exhausted")
