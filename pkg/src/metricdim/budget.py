"""Work limits for the exact searches."""

import time
from dataclasses import dataclass

from .errors import BudgetExceededError


@dataclass(frozen=True)
class SearchBudget:
    """Upper limits on search nodes visited and on wall-clock seconds."""

    max_subsets: int = 50_000_000
    max_time: float = 600.0

    def __post_init__(self):
        if self.max_subsets <= 0 or self.max_time <= 0:
            raise ValueError("budget limits must be positive")

    def meter(self, what="search"):
        return Meter(self, what)


class Meter:
    """Node counter that raises once its budget is spent.

    The clock is only consulted every 4096 ticks.
    """

    def __init__(self, budget, what="search"):
        self.budget = budget
        self.what = what
        self.nodes = 0
        self.start = time.perf_counter()
        self.lower = None
        self.upper = None

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_subsets:
            self._abort(f"{self.what}: node budget of {self.budget.max_subsets} exhausted")
        if self.nodes & 4095 == 0 and self.elapsed() > self.budget.max_time:
            self._abort(f"{self.what}: time budget of {self.budget.max_time}s exhausted")

    def elapsed(self):
        return time.perf_counter() - self.start

    def _abort(self, message):
        raise BudgetExceededError(message, lower=self.lower, upper=self.upper, nodes=self.nodes)


DEFAULT_BUDGET = SearchBudget()
