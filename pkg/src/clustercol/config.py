"""Search budgets and the error types shared by every exhaustive routine."""

from __future__ import annotations

import dataclasses
import os
import time


class InputError(ValueError):
    """A precondition of an operation was violated by its arguments."""


class DisconnectedGraphError(InputError):
    def __init__(self, vertex: int, message: str | None = None):
        self.vertex = vertex
        super().__init__(message or f"graph is disconnected: vertex {vertex} is unreachable")


class BudgetExceeded(RuntimeError):
    """An exhaustive search ran out of budget before reaching a definitive answer.

    This is the *indeterminate* outcome.  It is never a "no".  ``lower`` and
    ``upper`` carry the best known bounds for optimisation oracles.
    """

    def __init__(self, what: str, used: int = 0, lower: int | None = None, upper: int | None = None):
        self.what = what
        self.used = used
        self.lower = lower
        self.upper = upper
        msg = f"budget exceeded in {what} after {used} nodes"
        if lower is not None or upper is not None:
            msg += f" (bounds {lower}..{upper})"
        super().__init__(msg)


class InternalConsistencyError(RuntimeError):
    """A construction reached a state its correctness argument rules out."""


ENV_PREFIX = "CLUSTERCOL_"


@dataclasses.dataclass(frozen=True)
class Budgets:
    """Default limits for the brute-force oracles.

    Node budgets count search-tree nodes; ``seconds`` is a wall-clock cap
    applied on top (``None`` = no time cap).
    """

    minor_nodes: int = 3_000_000
    subgraph_nodes: int = 2_000_000
    strong_model_nodes: int = 2_000_000
    colouring_nodes: int = 5_000_000
    tree_depth_vertices: int = 20
    treewidth_vertices: int = 14
    weak_closure_vertices: int = 13
    iso_dedup_vertices: int = 12
    ternary_vertices: int = 200
    x_family_vertices: int = 400
    seconds: float | None = None

    @classmethod
    def from_env(cls, **overrides) -> "Budgets":
        """Defaults, then ``CLUSTERCOL_<FIELD>`` environment values, then ``overrides``."""
        values = {}
        for f in dataclasses.fields(cls):
            raw = os.environ.get(ENV_PREFIX + f.name.upper())
            if raw is None:
                continue
            values[f.name] = float(raw) if f.name == "seconds" else int(raw)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


DEFAULT_BUDGETS = Budgets()


class Meter:
    """Counts search nodes against a node limit and an optional deadline."""

    __slots__ = ("what", "limit", "used", "deadline")

    def __init__(self, what: str, limit: int, seconds: float | None = None):
        self.what = what
        self.limit = limit
        self.used = 0
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(self.what, self.used)
        if self.deadline is not None and (self.used & 1023) == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(self.what + " (time)", self.used)
