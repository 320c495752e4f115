"""Exact tree-depth, connected tree-depth and treewidth for small graphs."""

from __future__ import annotations

from .config import DEFAULT_BUDGETS, BudgetExceeded, Budgets
from .graph import Graph


def _mask_components(masks: tuple[int, ...], sub: int) -> list[int]:
    comps = []
    rest = sub
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            new = masks[v] & sub & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def tree_depth(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Minimum depth of a rooted forest whose closure contains ``g``.

    Exact recursion: a connected graph has tree-depth one more than the least
    tree-depth of ``g - v``; a disconnected one takes the max over components.
    Memoised on vertex subsets.
    """
    if g.n > budgets.tree_depth_vertices:
        raise BudgetExceeded(f"tree_depth on {g.n} vertices (limit {budgets.tree_depth_vertices})")
    masks = g.masks
    memo: dict[int, int] = {}

    def connected_td(sub: int) -> int:
        if sub & (sub - 1) == 0:
            return 1
        hit = memo.get(sub)
        if hit is not None:
            return hit
        size = bin(sub).count("1")
        best = size
        for v in _bits(sub):
            rest = sub & ~(1 << v)
            worst = 0
            for comp in _mask_components(masks, rest):
                # a component already as deep as ``best - 1`` cannot improve on best
                worst = max(worst, connected_td(comp))
                if worst + 1 >= best:
                    break
            best = min(best, worst + 1)
            if best == 2:  # a connected set with an edge cannot do better
                break
        memo[sub] = best
        return best

    full = (1 << g.n) - 1
    return max((connected_td(c) for c in _mask_components(masks, full)), default=0)


def connected_tree_depth(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Minimum depth of a single rooted tree whose closure contains ``g``."""
    if g.n == 0:
        return 0
    masks = g.masks
    full = (1 << g.n) - 1
    comps = _mask_components(masks, full)
    if len(comps) == 1:
        return tree_depth(g, budgets)
    depths = [tree_depth(g.induced(_bits(c))[0], budgets) for c in comps]
    top = max(depths)
    return top + 1 if depths.count(top) >= 2 else top


def treewidth_exact(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Exact treewidth by the subset dynamic programme over elimination orders.

    TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where Q(S, v) is
    the set of vertices outside S + v reachable from v through S.
    """
    if g.n > budgets.treewidth_vertices:
        raise BudgetExceeded(f"treewidth_exact on {g.n} vertices (limit {budgets.treewidth_vertices})")
    if g.n == 0:
        return -1
    masks = g.masks
    n = g.n
    full = (1 << n) - 1

    def q_size(s: int, v: int) -> int:
        seen = 1 << v
        frontier = 1 << v
        out = 0
        while frontier:
            u = frontier.bit_length() - 1
            frontier &= ~(1 << u)
            nb = masks[u] & ~seen
            seen |= nb
            out |= nb & ~s
            frontier |= nb & s
        return bin(out).count("1")

    tw = {0: -1}
    # subsets in order of size so TW(S - v) is always ready
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for s in range(1, full + 1):
        by_size[bin(s).count("1")].append(s)
    for size in range(1, n + 1):
        for s in by_size[size]:
            best = n
            for v in _bits(s):
                rest = s & ~(1 << v)
                val = max(tw[rest], q_size(rest, v))
                if val < best:
                    best = val
            tw[s] = best
    return tw[full]
