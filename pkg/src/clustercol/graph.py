"""Simple undirected graphs on dense integer vertices, rooted trees, BFS
layerings and block decompositions.

Vertices are always ``0..n-1``.  Every structure here is immutable once built.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

from .config import DisconnectedGraphError, InputError


@dataclasses.dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InputError("adjacency length does not match vertex count")

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks."""
        out = []
        for nbrs in self.adj:
            m = 0
            for w in nbrs:
                m |= 1 << w
            out.append(m)
        return tuple(out)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices``, relabelled in ascending order.

        Returns the subgraph and ``old``, where ``old[i]`` is the original
        index of new vertex ``i``.
        """
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        edges = [(new[u], new[v]) for u in old for v in self.adj[u] if u < v and v in new]
        return build_graph(len(old), edges), old

    def remove_vertices(self, removed: Iterable[int]) -> tuple["Graph", list[int]]:
        gone = set(removed)
        return self.induced(v for v in range(self.n) if v not in gone)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; duplicate pairs collapse, loops and bad indices raise."""
    if n < 0:
        raise InputError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; the i-th argument's vertices follow those of earlier ones."""
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return build_graph(offset, edges)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as ascending vertex lists, ordered by their least vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_connected_set(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def bfs_distances(g: Graph, r: int) -> list[int]:
    """Edge distances from ``r``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[r] = 0
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_parents(g: Graph, r: int, allowed: set[int] | None = None) -> dict[int, int]:
    """BFS tree from ``r`` inside ``allowed``; each vertex's parent is its
    least-index neighbour one layer closer to ``r``."""
    dist = {r: 0}
    order = [r]
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist and (allowed is None or w in allowed):
                dist[w] = dist[u] + 1
                order.append(w)
                queue.append(w)
    parent = {r: r}
    for v in order[1:]:
        parent[v] = min(w for w in g.adj[v] if dist.get(w) == dist[v] - 1)
    return parent


@dataclasses.dataclass(frozen=True)
class BFSLayering:
    root: int
    layer: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]

    def union_below(self, i: int) -> list[int]:
        """Vertices of layers ``0..i-1``."""
        return [v for j in range(min(i, len(self.layers))) for v in self.layers[j]]


def bfs_layering(g: Graph, r: int) -> BFSLayering:
    if not 0 <= r < g.n:
        raise InputError(f"root {r} outside 0..{g.n - 1}")
    dist = bfs_distances(g, r)
    for v, d in enumerate(dist):
        if d < 0:
            raise DisconnectedGraphError(v)
    depth = max(dist)
    layers = [[] for _ in range(depth + 1)]
    for v, d in enumerate(dist):
        layers[d].append(v)
    return BFSLayering(r, tuple(dist), tuple(tuple(layer) for layer in layers))


@dataclasses.dataclass(frozen=True)
class RootedTree:
    n: int
    parent: tuple[int, ...]
    root: int

    def __post_init__(self):
        if len(self.parent) != self.n or not 0 <= self.root < self.n:
            raise InputError("malformed rooted tree")
        if self.parent[self.root] != self.root:
            raise InputError("root must be its own parent")
        for v in range(self.n):
            seen = 0
            u = v
            while u != self.root:
                if u != self.root and self.parent[u] == u:
                    raise InputError(f"second root at node {u}")
                u = self.parent[u]
                seen += 1
                if seen > self.n:
                    raise InputError("parent pointers contain a cycle")

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        ch = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if v != self.root:
                ch[p].append(v)
        return tuple(tuple(c) for c in ch)

    @cached_property
    def node_depth(self) -> tuple[int, ...]:
        """Number of vertices on the path from the root (the root has depth 1)."""
        out = [0] * self.n
        for v in range(self.n):
            d, u = 1, v
            while u != self.root:
                u = self.parent[u]
                d += 1
            out[v] = d
        return tuple(out)

    @property
    def depth(self) -> int:
        return max(self.node_depth)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if not self.children[v]]

    def ancestors(self, v: int) -> list[int]:
        """Strict ancestors of ``v``, nearest first."""
        out = []
        while v != self.root:
            v = self.parent[v]
            out.append(v)
        return out


@dataclasses.dataclass(frozen=True)
class BlockForest:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    block_root: tuple[int, ...]
    parent_block: tuple[int | None, ...]


def _biconnected_blocks(g: Graph, start: int) -> list[set[int]]:
    # Iterative Hopcroft-Tarjan over the component of ``start``.
    disc = {start: 0}
    low = {start: 0}
    counter = 1
    blocks: list[set[int]] = []
    edge_stack: list[tuple[int, int]] = []
    stack = [(start, -1, iter(g.adj[start]))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append((u, w))
                stack.append((w, u, iter(g.adj[w])))
                advanced = True
                break
            if disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, u):
                        break
                blocks.append(block)
    if not blocks:
        blocks.append({start})
    return blocks


def block_decomposition(g: Graph, r: int) -> BlockForest:
    """Blocks of a connected graph, rooted towards ``r``.

    The block containing ``r`` is rooted at ``r``; every other block is rooted
    at its vertex nearest to ``r`` (the cut vertex separating it from ``r``).
    Blocks are listed by non-decreasing distance from ``r`` to their root.
    """
    if not 0 <= r < g.n:
        raise InputError(f"root {r} outside 0..{g.n - 1}")
    dist = bfs_distances(g, r)
    for v, d in enumerate(dist):
        if d < 0:
            raise DisconnectedGraphError(v)
    raw = _biconnected_blocks(g, r)
    rooted = []
    for b in raw:
        root = min(b, key=lambda v: (dist[v], v))
        rooted.append((dist[root], root, tuple(sorted(b))))
    rooted.sort()
    count: dict[int, int] = {}
    for _, _, b in rooted:
        for v in b:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c > 1)
    blocks = tuple(b for _, _, b in rooted)
    roots = tuple(root for _, root, _ in rooted)
    parents: list[int | None] = []
    for root in roots:
        if root == r:
            parents.append(None)
        else:
            # the unique block holding ``root`` that is not itself rooted there
            parents.append(next(j for j in range(len(blocks)) if root in blocks[j] and roots[j] != root))
    return BlockForest(blocks, cuts, roots, tuple(parents))


def is_biconnected(g: Graph) -> bool:
    """Connected with no cut vertex (so K_1 and K_2 count as blocks)."""
    if g.n == 0:
        return False
    if not is_connected(g):
        return False
    return len(_biconnected_blocks(g, 0)) == 1


# -- text formats -----------------------------------------------------------


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise InputError("edge list must start with a line 'n m'")
    n, m = int(rows[0][0]), int(rows[0][1])
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header promises {m} edges but {len(body)} follow")
    edges = []
    for row in body:
        if len(row) != 2:
            raise InputError(f"malformed edge line {' '.join(row)!r}")
        edges.append((int(row[0]), int(row[1])))
    return build_graph(n, edges)


_PALETTE = ["red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta", "gold", "gray"]


def to_dot(g: Graph, groups: Sequence[Iterable[int]] | None = None, name: str = "G") -> str:
    """DOT text; vertices in ``groups[i]`` are filled with the i-th palette colour."""
    fill = {}
    for i, grp in enumerate(groups or ()):
        for v in grp:
            fill[v] = _PALETTE[i % len(_PALETTE)]
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if v in fill:
            lines.append(f'  {v} [label="{v}", style=filled, fillcolor={fill[v]}];')
        else:
            lines.append(f'  {v} [label="{v}"];')
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
