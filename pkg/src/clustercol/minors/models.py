"""Minor models, strong models and the validators every emitted model goes through."""

from __future__ import annotations

import dataclasses
from typing import Iterable, Mapping

from ..config import InputError
from ..graph import Graph, is_connected_set


@dataclasses.dataclass(frozen=True)
class MinorModel:
    """Branch set ``branch_sets[x]`` of host vertices for each pattern vertex ``x``."""

    pattern: Graph
    branch_sets: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, pattern: Graph, sets: Iterable[Iterable[int]]) -> "MinorModel":
        return cls(pattern, tuple(frozenset(s) for s in sets))

    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.branch_sets) if self.branch_sets else frozenset()

    def as_lists(self) -> list[list[int]]:
        return [sorted(s) for s in self.branch_sets]


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclasses.dataclass(frozen=True)
class StrongModel:
    """Disjoint connected branch sets plus, per pattern edge, outside vertices
    adjacent to both ends.  A witness may serve several pattern edges.
    Branch sets of adjacent pattern vertices need not touch."""

    pattern: Graph
    branch_sets: tuple[frozenset[int], ...]
    witnesses: Mapping[tuple[int, int], frozenset[int]]

    @classmethod
    def of(cls, pattern: Graph, sets, witnesses) -> "StrongModel":
        return cls(
            pattern,
            tuple(frozenset(s) for s in sets),
            {_edge_key(*e): frozenset(w) for e, w in dict(witnesses).items()},
        )

    def witness(self, u: int, v: int) -> frozenset[int]:
        return self.witnesses[_edge_key(u, v)]

    def min_witnesses(self) -> int:
        return min((len(w) for w in self.witnesses.values()), default=0)

    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.branch_sets) if self.branch_sets else frozenset()


def _check_branch_sets(host: Graph, pattern: Graph, sets) -> None:
    if len(sets) != pattern.n:
        raise InputError(f"model has {len(sets)} branch sets for {pattern.n} pattern vertices")
    seen: dict[int, int] = {}
    for x, s in enumerate(sets):
        if not s:
            raise InputError(f"branch set of pattern vertex {x} is empty")
        for v in s:
            if not 0 <= v < host.n:
                raise InputError(f"branch set of {x} contains non-host vertex {v}")
            if v in seen:
                raise InputError(f"host vertex {v} lies in branch sets of {seen[v]} and {x}")
            seen[v] = x
        if not is_connected_set(host, s):
            raise InputError(f"branch set of pattern vertex {x} is not connected")


def _touch(host: Graph, a: frozenset[int], b: frozenset[int]) -> bool:
    return any(host.has_edge(u, v) for u in a for v in b)


def validate_model(host: Graph, model: MinorModel) -> None:
    """Raise ``InputError`` unless ``model`` is a minor model of its pattern in ``host``."""
    _check_branch_sets(host, model.pattern, model.branch_sets)
    for x, y in model.pattern.edges():
        if not _touch(host, model.branch_sets[x], model.branch_sets[y]):
            raise InputError(f"pattern edge ({x}, {y}) is not realised by any host edge")


def validate_strong_model(host: Graph, sm: StrongModel, k: int) -> None:
    """Raise ``InputError`` unless ``sm`` is a ``k``-strong model in ``host``."""
    _check_branch_sets(host, sm.pattern, sm.branch_sets)
    used = sm.vertices()
    for x, y in sm.pattern.edges():
        wit = sm.witnesses.get((x, y))
        if wit is None:
            raise InputError(f"pattern edge ({x}, {y}) has no witness set")
        if len(wit) < k:
            raise InputError(f"pattern edge ({x}, {y}) has {len(wit)} < {k} witnesses")
        for w in wit:
            if w in used:
                raise InputError(f"witness {w} of edge ({x}, {y}) lies in a branch set")
            if not (_touch(host, frozenset([w]), sm.branch_sets[x]) and _touch(host, frozenset([w]), sm.branch_sets[y])):
                raise InputError(f"witness {w} is not adjacent to both ends of ({x}, {y})")


def is_valid_model(host: Graph, model: MinorModel) -> bool:
    try:
        validate_model(host, model)
    except InputError:
        return False
    return True


def compose(outer: MinorModel, inner: MinorModel) -> MinorModel:
    """``outer`` models a pattern in graph ``A``; ``inner`` models ``A`` in ``G``.
    The result models the pattern in ``G``."""
    sets = [frozenset().union(*(inner.branch_sets[a] for a in s)) for s in outer.branch_sets]
    return MinorModel(outer.pattern, tuple(sets))
