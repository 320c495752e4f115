"""Colourings, forbidden-minor witnesses and the clustering / defect verifiers."""

from __future__ import annotations

import dataclasses
from typing import Sequence, Union

from ..config import InputError, InternalConsistencyError
from ..graph import Graph
from ..minors.models import MinorModel


@dataclasses.dataclass(frozen=True)
class Colouring:
    colour: tuple[int, ...]
    info: dict = dataclasses.field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def of(cls, colours: Sequence[int], **info) -> "Colouring":
        return cls(tuple(int(c) for c in colours), dict(info))

    @property
    def num_colours(self) -> int:
        return len(set(self.colour))

    def normalized(self) -> "Colouring":
        """Relabel colours 0, 1, ... in order of first appearance."""
        remap: dict[int, int] = {}
        out = []
        for c in self.colour:
            if c not in remap:
                remap[c] = len(remap)
            out.append(remap[c])
        return Colouring(tuple(out), dict(self.info))

    def __len__(self) -> int:
        return len(self.colour)


@dataclasses.dataclass(frozen=True)
class Witness:
    """A forbidden minor found instead of a colouring."""

    kind: str
    model: MinorModel


ColourOrWitness = Union[Colouring, Witness]


@dataclasses.dataclass(frozen=True)
class ClusterReport:
    num_colours: int
    max_component: int
    defect: int
    components: tuple[tuple[int, tuple[int, ...]], ...]


def _colours_of(g: Graph, col) -> tuple[int, ...]:
    colours = col.colour if isinstance(col, Colouring) else tuple(col)
    if len(colours) != g.n:
        raise InputError(f"colouring covers {len(colours)} of {g.n} vertices")
    if any(c is None or int(c) != c or c < 0 for c in colours):
        raise InputError("colours must be non-negative integers")
    return colours


def _components_union_find(g: Graph, colours) -> list[list[int]]:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        if colours[u] == colours[v]:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _components_dfs(g: Graph, colours) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w] and colours[w] == colours[s]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return sorted(out)


def verify_clustering(g: Graph, col) -> ClusterReport:
    """Monochromatic components, their largest size and the defect.

    Components are computed by union-find and by depth-first search; any
    disagreement raises ``InternalConsistencyError``.
    """
    colours = _colours_of(g, col)
    a = _components_union_find(g, colours)
    b = _components_dfs(g, colours)
    if a != b:
        raise InternalConsistencyError("union-find and DFS disagree on monochromatic components")
    defect = max((sum(1 for w in g.adj[v] if colours[w] == colours[v]) for v in range(g.n)), default=0)
    biggest = max((len(c) for c in a), default=0)
    if biggest and defect > biggest - 1:
        raise InternalConsistencyError("defect exceeds component size minus one")
    return ClusterReport(
        num_colours=len(set(colours)),
        max_component=biggest,
        defect=defect,
        components=tuple((colours[c[0]], tuple(c)) for c in a),
    )


def clustering(g: Graph, col) -> int:
    return verify_clustering(g, col).max_component


def verify_defect(g: Graph, col, d: int) -> bool:
    colours = _colours_of(g, col)
    return all(sum(1 for w in g.adj[v] if colours[w] == colours[v]) <= d for v in range(g.n))
