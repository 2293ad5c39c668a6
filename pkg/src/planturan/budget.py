"""Explicit work budgets for the exponential searches."""

from __future__ import annotations

import time


class BudgetExceeded(RuntimeError):
    """A search ran past its node or wall-clock allowance."""


class Budget:
    """Counts search nodes and watches a deadline.

    Every exhaustive routine in the package accepts an optional budget and
    calls :meth:`tick` once per expanded node.  Exhausting either limit raises
    :class:`BudgetExceeded`; nothing is ever silently truncated.
    """

    __slots__ = ("max_nodes", "deadline", "nodes")

    def __init__(self, max_nodes: int | None = None, max_seconds: float | None = None):
        self.max_nodes = max_nodes
        self.deadline = None if max_seconds is None else time.monotonic() + max_seconds
        self.nodes = 0

    def tick(self, count: int = 1) -> None:
        self.nodes += count
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget of {self.max_nodes} exceeded")
        # checking the clock on every node is measurably slow
        if self.deadline is not None and self.nodes & 0x3FF == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceeded("time budget exceeded")


def tick(budget: Budget | None) -> None:
    if budget is not None:
        budget.tick()
