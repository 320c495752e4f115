"""Exact colouring oracles: clustered, defective and proper (chromatic number).

The clustered and defective oracles share one backtracking search over
vertices in index order.  Symmetry is broken by letting a vertex open colour
``j`` only when colours ``0..j-1`` are already in use, so vertex 0 always gets
colour 0 and every colouring is visited once up to renaming.  The first
colouring found is therefore the lexicographically least canonical one.
"""

from __future__ import annotations

from typing import Iterator

from ..config import DEFAULT_BUDGETS, BudgetExceeded, Budgets, InputError, Meter
from ..graph import Graph
from .core import Colouring


class _ClusterSearch:
    """Backtracking over canonical colourings with clustering at most ``c``.

    Monochromatic components are tracked by a union-find with undo (union by
    size, no path compression).
    """

    def __init__(self, g: Graph, c: int, meter: Meter):
        self.g = g
        self.c = c
        self.meter = meter
        self.parent = list(range(g.n))
        self.size = [1] * g.n
        self.colour = [-1] * g.n
        self.earlier = [[w for w in g.adj[v] if w < v] for v in range(g.n)]

    def _find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def _place(self, v: int, col: int):
        """Colour ``v``; return the undo log, or ``None`` if a component grows past ``c``."""
        roots = set()
        for w in self.earlier[v]:
            if self.colour[w] == col:
                roots.add(self._find(w))
        total = 1 + sum(self.size[r] for r in roots)
        if total > self.c:
            return None
        self.colour[v] = col
        log = []
        for r in roots:
            a, b = self._find(v), r
            if self.size[a] < self.size[b]:
                a, b = b, a
            self.parent[b] = a
            self.size[a] += self.size[b]
            log.append((a, b))
        return log

    def _undo(self, v: int, log) -> None:
        for a, b in reversed(log):
            self.parent[b] = b
            self.size[a] -= self.size[b]
        self.colour[v] = -1

    def solutions(self, k: int) -> Iterator[tuple[int, ...]]:
        n = self.g.n

        def rec(v: int, used: int):
            if v == n:
                yield tuple(self.colour)
                return
            for col in range(min(used + 1, k)):
                self.meter.tick()
                log = self._place(v, col)
                if log is None:
                    continue
                yield from rec(v + 1, max(used, col + 1))
                self._undo(v, log)

        yield from rec(0, 0)


class _DefectSearch:
    def __init__(self, g: Graph, d: int, meter: Meter):
        self.g = g
        self.d = d
        self.meter = meter
        self.colour = [-1] * g.n
        self.same = [0] * g.n
        self.earlier = [[w for w in g.adj[v] if w < v] for v in range(g.n)]

    def solutions(self, k: int) -> Iterator[tuple[int, ...]]:
        n = self.g.n

        def rec(v: int, used: int):
            if v == n:
                yield tuple(self.colour)
                return
            for col in range(min(used + 1, k)):
                self.meter.tick()
                mates = [w for w in self.earlier[v] if self.colour[w] == col]
                if len(mates) > self.d or any(self.same[w] >= self.d for w in mates):
                    continue
                self.colour[v] = col
                self.same[v] = len(mates)
                for w in mates:
                    self.same[w] += 1
                yield from rec(v + 1, max(used, col + 1))
                for w in mates:
                    self.same[w] -= 1
                self.colour[v] = -1
                self.same[v] = 0

        yield from rec(0, 0)


def _greedy_upper(g: Graph) -> int:
    colour = [-1] * g.n
    for v in range(g.n):
        taken = {colour[w] for w in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        colour[v] = c
    return max(colour, default=-1) + 1


def _minimise(g: Graph, make_search, what: str, budgets: Budgets) -> tuple[int, Colouring]:
    if g.n == 0:
        return 0, Colouring(())
    upper = _greedy_upper(g)
    meter = Meter(what, budgets.colouring_nodes, budgets.seconds)
    search = make_search(meter)
    for k in range(1, upper + 1):
        try:
            found = next(search.solutions(k), None)
        except BudgetExceeded as exc:
            raise BudgetExceeded(what, exc.used, lower=k, upper=upper) from None
        if found is not None:
            return k, Colouring(found)
    raise InputError(f"{what}: no colouring with {upper} colours; parameters out of range")


def optimal_cluster_colouring(g: Graph, c: int, budgets: Budgets = DEFAULT_BUDGETS) -> tuple[int, Colouring]:
    """Least ``k`` with a k-colouring of clustering at most ``c``, plus the
    lexicographically least canonical witness."""
    if c < 1:
        raise InputError("clustering bound must be at least 1")
    return _minimise(g, lambda m: _ClusterSearch(g, c, m), "optimal_cluster_colouring", budgets)


def cluster_colourings(g: Graph, k: int, c: int, budgets: Budgets = DEFAULT_BUDGETS) -> Iterator[Colouring]:
    """Every colouring with at most ``k`` colours and clustering at most ``c``,
    one per colour-renaming class, in lexicographic order."""
    meter = Meter("cluster_colourings", budgets.colouring_nodes, budgets.seconds)
    for sol in _ClusterSearch(g, c, meter).solutions(k):
        yield Colouring(sol)


def defect_oracle(g: Graph, d: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Least number of colours such that every vertex has at most ``d`` neighbours of its colour."""
    if d < 0:
        raise InputError("defect bound must be non-negative")
    k, _ = _minimise(g, lambda m: _DefectSearch(g, d, m), "defect_oracle", budgets)
    return k


def chromatic_number(g: Graph, max_vertices: int = 16) -> int:
    """Proper chromatic number by dynamic programming over vertex subsets.

    ``best[S]`` is the least number of independent sets covering ``S``; the set
    holding the lowest vertex of ``S`` is enumerated among independent subsets.
    Independent of the backtracking oracles above.
    """
    if g.n > max_vertices:
        raise BudgetExceeded(f"chromatic_number on {g.n} vertices (limit {max_vertices})")
    n = g.n
    full = (1 << n) - 1
    masks = g.masks
    independent = [True] * (full + 1)
    for s in range(1, full + 1):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        independent[s] = independent[rest] and not (masks[v] & rest)
    best = [0] * (full + 1)
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        value = n
        sub = rest
        while True:
            piece = sub | low
            if independent[piece]:
                value = min(value, best[s ^ piece] + 1)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[s] = value
    return best[full]
