"""Split a model of W(h, 6k) into two models of W(h, k) sharing at most one vertex.

The root branch set ``J_r`` is spanned by its least-index BFS tree.  Each leaf
``x`` of the pattern tree keeps only its lexicographically least edge
``(a, b)``, ``a`` in ``J_r``, ``b`` in ``J_x``.  The tree is then expanded to
``Q`` (maximum degree 3): a vertex ``a`` of ``J_r`` with items (tree
neighbours by index, then attached pattern leaves by index) becomes one copy
when it has at most 3 items, else a path of ``items - 2`` copies where the
first and last copies carry two items and inner copies carry one.  Attached
pattern leaves become leaves of ``Q``.
"""

from __future__ import annotations

import dataclasses
from collections import deque

from ..config import InputError, InternalConsistencyError
from ..generators import complete_kary_tree, weak_closure
from ..graph import Graph
from .models import MinorModel, validate_model


@dataclasses.dataclass(frozen=True)
class SplitSide:
    vertices: frozenset[int]
    model: MinorModel


@dataclasses.dataclass(frozen=True)
class SplitResult:
    first: SplitSide
    second: SplitSide
    q_edge: tuple[int, int]

    @property
    def shared(self) -> frozenset[int]:
        return self.first.vertices & self.second.vertices


def _span_tree(g: Graph, vertices: frozenset[int]) -> dict[int, list[int]]:
    root = min(vertices)
    seen = {root}
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in vertices and w not in seen:
                seen.add(w)
                adj[u].append(w)
                adj[w].append(u)
                queue.append(w)
    for v in adj:
        adj[v].sort()
    return adj


def _alive(h: int, arity: int, live_leaves: set[int], need: int) -> list[bool]:
    tree = complete_kary_tree(h, arity)
    alive = [False] * tree.n
    for v in reversed(range(tree.n)):
        kids = tree.children[v]
        if not kids:
            alive[v] = v in live_leaves
        else:
            alive[v] = sum(alive[c] for c in kids) >= need
    return alive


def split_weak_model(g: Graph, model: MinorModel, h: int, k: int) -> SplitResult:
    """Two subgraphs, each carrying a W(h, k) model, sharing at most one vertex."""
    if h < 2 or k < 1:
        raise InputError("split_weak_model needs h >= 2 and k >= 1")
    big = 6 * k
    tree = complete_kary_tree(h, big)
    pattern = weak_closure(tree)
    if model.pattern.n != pattern.n or model.pattern.edges() != pattern.edges():
        raise InputError(f"model is not a model of W({h}, {big})")
    validate_model(g, model)
    jr = model.branch_sets[0]
    leaves = tree.leaves()
    attach: dict[int, tuple[int, int]] = {}
    for x in leaves:
        best = None
        for a in sorted(jr):
            hit = [b for b in g.adj[a] if b in model.branch_sets[x]]
            if hit:
                best = (a, min(hit))
                break
        attach[x] = best
    span = _span_tree(g, jr)

    # Build Q. Q nodes: ("c", a, i) copies and ("l", x) pattern-leaf attachments.
    q_adj: dict[tuple, set[tuple]] = {}
    owner: dict[tuple, int] = {}

    def add(u, w):
        q_adj.setdefault(u, set()).add(w)
        q_adj.setdefault(w, set()).add(u)

    holder: dict[tuple[int, int], tuple] = {}  # (a, item-key) -> copy carrying it
    for a in sorted(jr):
        items = [("t", b) for b in span[a]] + [("l", x) for x in leaves if attach[x][0] == a]
        d = len(items)
        ncopies = 1 if d <= 3 else d - 2
        copies = [("c", a, i) for i in range(ncopies)]
        for cp in copies:
            q_adj.setdefault(cp, set())
            owner[cp] = a
        for i in range(ncopies - 1):
            add(copies[i], copies[i + 1])
        for idx, item in enumerate(items):
            if ncopies == 1:
                cp = copies[0]
            elif idx < 2:
                cp = copies[0]
            elif idx >= d - 2:
                cp = copies[-1]
            else:
                cp = copies[idx - 1]
            holder[(a, item)] = cp
            if item[0] == "l":
                leaf = ("l", item[1])
                owner[leaf] = a
                add(cp, leaf)
    for a in sorted(jr):
        for b in span[a]:
            if a < b:
                add(holder[(a, ("t", b))], holder[(b, ("t", a))])
    max_deg = max(len(s) for s in q_adj.values())
    if max_deg > 3:
        raise InternalConsistencyError(f"expanded tree has degree {max_deg}")

    order = sorted(q_adj, key=repr)
    index = {u: i for i, u in enumerate(order)}

    def side(start, banned) -> set[tuple]:
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in q_adj[u]:
                if w not in seen and w != banned:
                    seen.add(w)
                    stack.append(w)
        return seen

    q_edges = sorted({tuple(sorted((index[u], index[w]))) for u in q_adj for w in q_adj[u]})
    for iu, iw in q_edges:
        u, w = order[iu], order[iw]
        side_u, side_w = side(u, w), side(w, u)
        live_u = {node[1] for node in side_u if node[0] == "l"}
        live_w = {node[1] for node in side_w if node[0] == "l"}
        alive_u = _alive(h, big, live_u, 2 * k)
        alive_w = _alive(h, big, live_w, 2 * k)
        if alive_u[0] and alive_w[0]:
            break
    else:
        raise InternalConsistencyError("every edge of the expanded tree has exactly one good side")

    kids0 = tree.children[0]
    a_set = [c for c in kids0 if alive_u[c]][:k]
    b_set = [c for c in kids0 if alive_w[c] and c not in a_set][:k]
    if len(a_set) < k or len(b_set) < k:
        raise InternalConsistencyError("root alive on both sides but disjoint child sets not found")

    small = complete_kary_tree(h, k)
    small_pattern = weak_closure(small)

    def build(top: list[int], alive: list[bool], q_side: set[tuple]) -> SplitSide:
        image = {0: 0}
        frontier = deque()
        for j, c in enumerate(top):
            image[small.children[0][j]] = c
            frontier.append(small.children[0][j])
        while frontier:
            s = frontier.popleft()
            big_node = image[s]
            if not small.children[s]:
                continue
            picked = [c for c in tree.children[big_node] if alive[c]][:k]
            if len(picked) < k:
                raise InternalConsistencyError("alive vertex with fewer than k alive children")
            for j, c in enumerate(picked):
                image[small.children[s][j]] = c
                frontier.append(small.children[s][j])
        root_part = frozenset(owner[node] for node in q_side)
        sets = [root_part] + [model.branch_sets[image[s]] for s in range(1, small.n)]
        m = MinorModel(small_pattern, tuple(sets))
        validate_model(g, m)
        return SplitSide(frozenset().union(*sets), m)

    first = build(a_set, alive_u, side_u)
    second = build(b_set, alive_w, side_w)
    out = SplitResult(first, second, (iu, iw))
    if len(out.shared) > 1:
        raise InternalConsistencyError(f"split sides share {len(out.shared)} vertices")
    return out
