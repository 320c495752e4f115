"""Deterministic constructors for the named graph families.

Vertex numbering is part of each constructor's contract (tests rely on it):

* ``path(n)``: ``0 - 1 - ... - n-1``.
* ``fan(n)``: path ``0..n-1`` plus dominant vertex ``n``.
* ``fat_star(n)``: centre ``0``, star leaves ``1..n``; the thickening vertices of
  star edge ``(0, i)`` are ``n + 1 + (i-1)*n + j`` for ``j < n``.
* ``fat_path(n)``: path ``0..n-1``; thickening vertices of edge ``(i, i+1)`` are
  ``n + i*n + j`` for ``j < n``.
* ``complete_kary_tree(h, k)``: level order, root ``0``, children of node ``v``
  are ``k*v + 1 .. k*v + k``.
* ``x_prime``: copy ``j`` of ``G`` occupies ``j*|G| ..``; dominant vertex last.
* ``x_plus`` / ``x_plusplus`` / ``decorate``: the input graph keeps its indices;
  new vertices are appended clique by clique in lexicographic clique order.
"""

from __future__ import annotations

import warnings
from itertools import combinations
from typing import Iterable, Sequence

from .config import DEFAULT_BUDGETS, BudgetExceeded, Budgets, InputError
from .graph import Graph, RootedTree, build_graph, disjoint_union


class NoCliqueWarning(UserWarning):
    """A clique-joining operation found no clique of the requested size."""


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """K_{1,n} with centre 0."""
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}: side one is ``0..s-1``, side two ``s..s+t-1``."""
    return build_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def bowtie() -> Graph:
    """Two triangles sharing vertex 2."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def fan(n: int) -> Graph:
    if n < 1:
        raise InputError("fan needs n >= 1")
    return build_graph(n + 1, [(i, i + 1) for i in range(n - 1)] + [(i, n) for i in range(n)])


def fat_star(n: int) -> Graph:
    if n < 1:
        raise InputError("fat star needs n >= 1")
    edges = [(0, i) for i in range(1, n + 1)]
    nxt = n + 1
    for i in range(1, n + 1):
        for _ in range(n):
            edges += [(nxt, 0), (nxt, i)]
            nxt += 1
    return build_graph(nxt, edges)


def fat_path(n: int) -> Graph:
    if n < 1:
        raise InputError("fat path needs n >= 1")
    edges = [(i, i + 1) for i in range(n - 1)]
    nxt = n
    for i in range(n - 1):
        for _ in range(n):
            edges += [(nxt, i), (nxt, i + 1)]
            nxt += 1
    return build_graph(nxt, edges)


def complete_kary_tree(h: int, k: int) -> RootedTree:
    """Rooted complete k-ary tree with ``h`` vertices on each root-leaf path."""
    if h < 1 or k < 1:
        raise InputError("complete_kary_tree needs h >= 1 and k >= 1")
    size = h if k == 1 else (k**h - 1) // (k - 1)
    parent = [0] + [(v - 1) // k for v in range(1, size)]
    return RootedTree(size, tuple(parent), 0)


def closure(t: RootedTree) -> Graph:
    return build_graph(t.n, [(v, a) for v in range(t.n) for a in t.ancestors(v)])


def weak_closure(t: RootedTree) -> Graph:
    return build_graph(t.n, [(v, a) for v in t.leaves() for a in t.ancestors(v)])


def closure_tree(h: int, k: int) -> Graph:
    """Closure of the complete k-ary tree of depth h."""
    return closure(complete_kary_tree(h, k))


def weak_closure_tree(h: int, k: int) -> Graph:
    """Weak closure of the complete k-ary tree of depth h."""
    return weak_closure(complete_kary_tree(h, k))


def cliques_of_size(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-vertex cliques (not only maximal ones), lexicographically ordered."""
    if k <= 0:
        return [()]
    masks = g.masks
    out: list[tuple[int, ...]] = []

    def extend(clique: list[int], cand: int):
        if len(clique) == k:
            out.append(tuple(clique))
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # only larger-indexed neighbours keep the enumeration lexicographic and duplicate-free
            clique.append(v)
            extend(clique, cand & masks[v])
            clique.pop()

    extend([], (1 << g.n) - 1)
    return out


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with pivoting."""
    masks = g.masks
    out = []

    def bk(r: list[int], p: int, x: int):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot_pool = p | x
        pivot = max(_iter_bits(pivot_pool), key=lambda u: bin(masks[u] & p).count("1"))
        for v in list(_iter_bits(p & ~masks[pivot])):
            bk(r + [v], p & masks[v], x & masks[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        bk([], (1 << g.n) - 1, 0)
    return sorted(out)


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def x_prime(g: Graph, c: int) -> Graph:
    """``c`` disjoint copies of ``g`` plus one dominant vertex."""
    if c < 1:
        raise InputError("x_prime needs c >= 1")
    if g.n == 0:
        raise InputError("x_prime needs a nonempty graph")
    body = disjoint_union(*([g] * c))
    apex = body.n
    return build_graph(apex + 1, body.edges() + [(v, apex) for v in range(apex)])


def _join_per_clique(g: Graph, size: int, attach_edges: Sequence[tuple[int, int]], count: int) -> Graph:
    cliques = cliques_of_size(g, size)
    if not cliques:
        warnings.warn(f"graph has no {size}-clique; returned unchanged", NoCliqueWarning, stacklevel=3)
        return g
    edges = g.edges()
    nxt = g.n
    for d in cliques:
        edges += [(nxt + a, nxt + b) for a, b in attach_edges]
        edges += [(nxt + j, v) for j in range(count) for v in d]
        nxt += count
    return build_graph(nxt, edges)


def x_plus(g: Graph, k: int, c: int) -> Graph:
    """For each k-clique add a stable set of ``k(c-1)+1`` vertices complete to it."""
    if k < 2 or c < 1:
        raise InputError("x_plus needs k >= 2 and c >= 1")
    return _join_per_clique(g, k, [], k * (c - 1) + 1)


def x_plusplus(g: Graph, k: int, c: int) -> Graph:
    """For each (k-1)-clique add a path of ``(c^2-1)(k-1)+(c+1)`` vertices complete to it."""
    if k < 3 or c < 1:
        raise InputError("x_plusplus needs k >= 3 and c >= 1")
    length = (c * c - 1) * (k - 1) + (c + 1)
    return _join_per_clique(g, k - 1, [(j, j + 1) for j in range(length - 1)], length)


def _isomorphic(a: Graph, b: Graph) -> bool:
    import networkx as nx

    if a.n != b.n or a.m != b.m:
        return False
    if sorted(map(len, a.adj)) != sorted(map(len, b.adj)):
        return False
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def _dedup(graphs: Iterable[Graph], bound: int) -> list[Graph]:
    out: list[Graph] = []
    for g in graphs:
        if g.n <= bound and any(h.n == g.n and _isomorphic(h, g) for h in out):
            continue
        if g.n > bound and g in out:
            continue
        out.append(g)
    return out


def x_family(k: int, c: int, budget: int, budgets: Budgets = DEFAULT_BUDGETS) -> list[Graph]:
    """Members of the recursively defined extremal family at level ``k``.

    Level 1 is ``[P_{c+1}, K_{1,c}]``.  Level ``k`` lists, for each member of
    level ``k-1`` in order, its dominant-vertex extension then its stable-set
    extension; then, when ``k >= 3``, the path extension of each level ``k-2``
    member.  Isomorphic duplicates are dropped up to
    ``budgets.iso_dedup_vertices`` vertices.  Members larger than
    ``budgets.x_family_vertices`` are not built.  At most ``budget`` graphs are
    returned.
    """
    if k < 1 or c < 1:
        raise InputError("x_family needs k >= 1 and c >= 1")
    if budget <= 0:
        return []
    bound = budgets.iso_dedup_vertices
    cap = budgets.x_family_vertices
    levels: dict[int, list[Graph]] = {1: _dedup([path(c + 1), star(c)], bound)}
    for level in range(2, k + 1):
        made: list[Graph] = []
        for g in levels[level - 1]:
            if c * g.n + 1 <= cap:
                made.append(x_prime(g, c))
            plus_size = g.n + len(cliques_of_size(g, level)) * (level * (c - 1) + 1)
            if plus_size <= cap:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", NoCliqueWarning)
                    made.append(x_plus(g, level, c))
        if level >= 3:
            length = (c * c - 1) * (level - 1) + (c + 1)
            for g in levels[level - 2]:
                if g.n + len(cliques_of_size(g, level - 1)) * length <= cap:
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore", NoCliqueWarning)
                        made.append(x_plusplus(g, level, c))
        levels[level] = _dedup(made, bound)
    return levels[k][:budget]


def ternary_lower_bound(k: int, c: int, budgets: Budgets = DEFAULT_BUDGETS) -> Graph:
    """The graph ``G_k`` with no (2k-3)-colouring of clustering ``c``.

    ``G_2`` is the path on ``c+1`` vertices.  ``G_k`` is a spine path
    ``0..c`` where, for each spine edge in order, ``2c-1`` disjoint copies of
    ``G_{k-1}`` are appended, each complete to both spine ends.
    """
    if k < 2 or c < 1:
        raise InputError("ternary_lower_bound needs k >= 2 and c >= 1")
    size = c + 1
    for _ in range(3, k + 1):
        size = (c + 1) + c * (2 * c - 1) * size
        if size > budgets.ternary_vertices:
            raise BudgetExceeded(
                f"ternary_lower_bound({k}, {c}) needs more than {budgets.ternary_vertices} vertices"
            )
    g = path(c + 1)
    for _ in range(3, k + 1):
        inner = g
        edges = [(i, i + 1) for i in range(c)]
        nxt = c + 1
        for i in range(c):
            for _ in range(2 * c - 1):
                edges += [(u + nxt, v + nxt) for u, v in inner.edges()]
                edges += [(nxt + x, s) for x in range(inner.n) for s in (i, i + 1)]
                nxt += inner.n
        g = build_graph(nxt, edges)
    return g


def decorate(g: Graph, h: Graph, s: Iterable[int]) -> Graph:
    """Disjoint union of ``g`` and ``h`` (appended) plus all edges between ``s`` and ``V(h)``."""
    sv = sorted(set(s))
    for a, b in combinations(sv, 2):
        if not g.has_edge(a, b):
            raise InputError(f"join set is not a clique: {a} and {b} are non-adjacent")
    for v in sv:
        if not 0 <= v < g.n:
            raise InputError(f"join vertex {v} outside graph")
    body = disjoint_union(g, h)
    return build_graph(body.n, body.edges() + [(v, g.n + x) for v in sv for x in range(h.n)])


# -- seeded randomness --------------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator.

    state += 0x9E3779B97F4A7C15; z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
    return z ^ (z >> 31)            (all arithmetic mod 2^64)

    ``random()`` maps the top 53 bits of the next output to [0, 1).
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, n: int) -> int:
        """Uniform-ish integer in ``0..n-1`` (multiply-shift on the top 53 bits)."""
        return int(self.random() * n)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p): pairs ``(u, v)``, ``u < v``, visited lexicographically; each is
    an edge iff the next ``SplitMix64(seed).random()`` draw is below ``p``."""
    if not 0.0 <= p <= 1.0:
        raise InputError("edge probability must lie in [0, 1]")
    rng = SplitMix64(seed)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_tree(n: int, max_degree: int, seed: int) -> Graph:
    """Random tree with maximum degree at most ``max_degree``: vertex ``v`` attaches
    to a uniformly drawn earlier vertex that still has spare degree."""
    if max_degree < 2 and n > 2:
        raise InputError("trees on more than 2 vertices need max_degree >= 2")
    rng = SplitMix64(seed)
    deg = [0] * n
    edges = []
    for v in range(1, n):
        open_ = [u for u in range(v) if deg[u] < max_degree]
        u = open_[rng.below(len(open_))]
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return build_graph(n, edges)
