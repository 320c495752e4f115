"""Constructive extraction of fan, fat-star and fat-path minors.

Each routine follows a combinatorial argument step by step and returns a
model that is re-validated before it leaves the function.  Pattern numbering
is that of ``generators.fan``, ``generators.fat_star`` and
``generators.fat_path``.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from ..config import DEFAULT_BUDGETS, Budgets, InputError, InternalConsistencyError
from ..generators import fan, fat_path, fat_star, path, star
from ..graph import (
    BFSLayering,
    Graph,
    bfs_layering,
    bfs_parents,
    build_graph,
    connected_components,
    is_biconnected,
    is_connected,
    is_connected_set,
)
from .models import MinorModel, StrongModel, compose, validate_model, validate_strong_model
from .search import has_subgraph


def high_degree_threshold(k: int) -> int:
    """d(k) = (k+2) k^k (18 k^(2k+1) + 1), exact."""
    return (k + 2) * k**k * (18 * k ** (2 * k + 1) + 1)


def _lift(model: MinorModel, old: Sequence[int]) -> MinorModel:
    return MinorModel(model.pattern, tuple(frozenset(old[v] for v in s) for s in model.branch_sets))


def _fan_along(walk: Sequence[int], marked: set[int], apex: frozenset[int], k: int) -> MinorModel:
    """k-fan model: the first ``k`` marked vertices of ``walk`` each start a
    spine segment, ``apex`` is the dominant branch set."""
    hits = [i for i, v in enumerate(walk) if v in marked][:k]
    if len(hits) < k:
        raise InternalConsistencyError("fewer marked vertices on the walk than claimed")
    sets = []
    for j, start in enumerate(hits):
        stop = hits[j + 1] if j + 1 < k else start + 1
        sets.append(frozenset(walk[start:stop]))
    sets.append(apex)
    return MinorModel(fan(k), tuple(sets))


def _tree_path(parent: dict[int, int], w: int) -> list[int]:
    out = [w]
    while parent[out[-1]] != out[-1]:
        out.append(parent[out[-1]])
    return out


# -- one high-degree vertex ---------------------------------------------------


@dataclasses.dataclass(frozen=True)
class OneHighResult:
    """Either ``fan`` is a k-fan model, or ``x`` is connected, avoids ``v`` and
    ``s``, and every vertex of ``s`` is a neighbour of ``v`` adjacent to ``x``."""

    fan: MinorModel | None = None
    x: frozenset[int] = frozenset()
    s: tuple[int, ...] = ()


def _is_cut_vertex(g: Graph, v: int) -> bool:
    rest, _ = g.remove_vertices([v])
    return rest.n > 0 and not is_connected(rest)


def one_high(g: Graph, v: int, k: int, l: int) -> OneHighResult:
    """A k-fan model, or a connected ``X`` with ``l`` neighbours of ``v`` outside
    ``X`` and adjacent to it.

    The root ``r`` is the least vertex outside ``N[v]`` (or the least neighbour
    when ``v`` dominates, in which case ``r`` is barred from ``S``).  Each
    neighbour ``w`` routes to ``r`` along the least-index BFS tree of ``G - v``.
    ``S`` is the greedy minimum-degree stable set of the conflict graph.
    """
    if k < 1 or l < 1:
        raise InputError("one_high needs k, l >= 1")
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} outside graph")
    if not is_connected(g):
        raise InputError("one_high needs a connected graph")
    if _is_cut_vertex(g, v):
        raise InputError(f"vertex {v} is a cut vertex")
    nbrs = set(g.adj[v])
    if len(nbrs) < 2 * l * k:
        raise InputError(f"deg({v}) = {len(nbrs)} < 2lk = {2 * l * k}")
    outside = [u for u in range(g.n) if u != v and u not in nbrs]
    r = min(outside) if outside else min(nbrs)
    allowed = set(range(g.n)) - {v}
    parent = bfs_parents(g, r, allowed)
    paths = {w: _tree_path(parent, w) for w in sorted(nbrs)}
    for w, p in paths.items():
        if sum(1 for u in p if u in nbrs) >= k:
            return OneHighResult(fan=_fan_along(p, nbrs, frozenset([v]), k))
    conflict: dict[int, set[int]] = {w: set() for w in paths if w != r}
    for w, p in paths.items():
        for u in p:
            if u != w and u in nbrs and u != r and w != r:
                conflict[w].add(u)
                conflict[u].add(w)
    chosen: list[int] = []
    live = dict((w, set(nb)) for w, nb in conflict.items())
    while live and len(chosen) < l:
        w = min(live, key=lambda u: (len(live[u]), u))
        chosen.append(w)
        gone = live[w] | {w}
        for u in gone:
            live.pop(u, None)
        for nb in live.values():
            nb -= gone
    if len(chosen) < l:
        raise InternalConsistencyError("stable set smaller than the degree bound guarantees")
    s = tuple(sorted(chosen))
    x = frozenset(u for w in s for u in paths[w]) - set(s)
    if not x or not is_connected_set(g, x):
        raise InternalConsistencyError("union of routing paths is not connected")
    return OneHighResult(x=x, s=s)


# -- many high-degree vertices -------------------------------------------------


def many_high(g: Graph, vs: Sequence[int], k: int) -> MinorModel:
    """A k-fan or k-fat-star model when ``C = G - vs`` is connected and each
    ``v_i`` has at least ``k^3`` neighbours in ``C``.

    Leaves are collected deepest layer first; each ``S_i`` stops at ``k + 1``
    vertices.  Ties: least eligible ``i`` first, then least vertex in the
    current layer.
    """
    vs = list(vs)
    if k < 1 or len(vs) != k or len(set(vs)) != k:
        raise InputError("many_high needs exactly k distinct vertices")
    for v in vs:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} outside graph")
    c_graph, old = g.remove_vertices(vs)
    if c_graph.n == 0 or not is_connected(c_graph):
        raise InputError("G minus the chosen vertices must be connected and nonempty")
    new = {u: i for i, u in enumerate(old)}
    nc = [set(new[u] for u in g.adj[v] if u in new) for v in vs]
    for v, nb in zip(vs, nc):
        if len(nb) < k**3:
            raise InputError(f"vertex {v} has {len(nb)} < k^3 = {k**3} neighbours in C")
    r = 0
    lay = bfs_layering(c_graph, r)
    parent = bfs_parents(c_graph, r)
    in_x = {r}
    tree_parent = {r: r}
    sets: list[list[int]] = [[] for _ in range(k)]
    t = len(lay.layers) - 1
    while any(len(s) <= k for s in sets):
        if t < 0:
            raise InternalConsistencyError("ran out of layers before the leaf sets filled")
        pick = None
        for i in range(k):
            if len(sets[i]) > k:
                continue
            cand = [w for w in lay.layers[t] if w in nc[i] and w not in in_x]
            if cand:
                pick = (i, min(cand))
                break
        if pick is None:
            t -= 1
            continue
        i, w = pick
        p = [w]
        while p[-1] not in in_x:
            p.append(parent[p[-1]])
        for j in range(k):
            if sum(1 for u in p if u in nc[j]) >= k:
                spine = _fan_along(p, nc[j], frozenset(), k).branch_sets[:-1]
                lifted = [frozenset(old[u] for u in s) for s in spine] + [frozenset([vs[j]])]
                out = MinorModel(fan(k), tuple(lifted))
                validate_model(g, out)
                return out
        sets[i].append(w)
        for a, b in zip(p, p[1:]):
            tree_parent[a] = b
            in_x.add(a)
    leaves = {u for s in sets for u in s}
    centre = frozenset(old[u] for u in in_x - leaves)
    branch = [centre]
    thick = []
    for i in range(k):
        first, rest = sets[i][0], sets[i][1:]
        branch.append(frozenset([vs[i], old[first]]))
        thick += [frozenset([old[u]]) for u in rest]
    out = MinorModel(fat_star(k), tuple(branch + thick))
    validate_model(g, out)
    return out


# -- strong models -------------------------------------------------------------


def find_forest(b: Graph, side_a: Sequence[int], k: int, p: int) -> StrongModel:
    """k-strong model of ``H`` on ``side_a`` where ``xy`` is an edge iff ``x`` and
    ``y`` have at least ``k`` common neighbours.  Pattern vertex ``i`` is
    ``sorted(side_a)[i]``; witnesses are the full common neighbourhoods."""
    a = sorted(set(side_a))
    aset = set(a)
    for u in a:
        if not 0 <= u < b.n:
            raise InputError(f"vertex {u} outside graph")
    for u, w in b.edges():
        if (u in aset) == (w in aset):
            raise InputError(f"edge ({u}, {w}) does not cross the bipartition")
    for w in range(b.n):
        if w not in aset and b.degree(w) < 2:
            raise InputError(f"vertex {w} on the far side has degree < 2")
    big = sum(1 for u in a if b.degree(u) >= k * len(a))
    if big < p:
        raise InputError(f"only {big} < p = {p} vertices have degree >= k|A|")
    nb = [set(b.adj[u]) for u in a]
    edges, wit = [], {}
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            common = nb[i] & nb[j]
            if len(common) >= k:
                edges.append((i, j))
                wit[(i, j)] = frozenset(common)
    if 2 * len(edges) < p:
        raise InternalConsistencyError(f"only {len(edges)} edges for p = {p}")
    sm = StrongModel(build_graph(len(a), edges), tuple(frozenset([u]) for u in a), wit)
    validate_strong_model(b, sm, k)
    return sm


def _drop_isolated(sm: StrongModel) -> StrongModel:
    keep = [x for x in range(sm.pattern.n) if sm.pattern.adj[x]]
    idx = {x: i for i, x in enumerate(keep)}
    pattern = build_graph(len(keep), [(idx[a], idx[b]) for a, b in sm.pattern.edges()])
    wit = {(idx[a], idx[b]): w for (a, b), w in sm.witnesses.items()}
    return StrongModel(pattern, tuple(sm.branch_sets[x] for x in keep), wit)


def make_connected_model(g: Graph, sm: StrongModel, k: int) -> StrongModel:
    """Merge the components of the pattern until it is connected.

    Input: a ``(k + 2c - 2)``-strong model of a pattern with ``c`` components
    (after dropping isolated pattern vertices) in a connected host.  Each round
    joins two component regions (branch sets plus witnesses) by a shortest
    path through unused vertices, identifies one pattern vertex from each side
    and discards the at most two witnesses the path consumed.  The edge count
    is preserved and every edge keeps at least ``k`` witnesses.
    """
    if not is_connected(g):
        raise InputError("make_connected_model needs a connected host")
    sm = _drop_isolated(sm)
    comps = connected_components(sm.pattern)
    c = len(comps)
    if c <= 1:
        validate_strong_model(g, sm, k)
        return sm
    validate_strong_model(g, sm, k + 2 * c - 2)
    sets = [set(s) for s in sm.branch_sets]
    wit = {e: set(w) for e, w in sm.witnesses.items()}
    edges = sm.pattern.edges()
    while True:
        pattern = build_graph(len(sets), edges)
        comps = connected_components(pattern)
        if len(comps) == 1:
            break
        owner: dict[int, tuple[int, int]] = {}  # host vertex -> (component, pattern vertex)
        region: list[set[int]] = []
        for a, comp in enumerate(comps):
            cs = set(comp)
            reg = set()
            for x in comp:
                reg |= sets[x]
                for u in sets[x]:
                    owner.setdefault(u, (a, x))
            for (x, y), w in sorted(wit.items()):
                if x in cs:
                    reg |= w
                    for u in sorted(w):
                        owner.setdefault(u, (a, x))
            region.append(reg)
        link = _link_regions(g, region)
        if link is None:
            raise InternalConsistencyError("host is connected but component regions are not linked")
        (a, x_end), (b, y_end), walk = link
        i = _pattern_vertex_for(x_end, a, comps, sets, wit)
        j = _pattern_vertex_for(y_end, b, comps, sets, wit)
        merged = sets[i] | sets[j] | set(walk)
        lo, hi = min(i, j), max(i, j)
        sets[lo] = merged
        del sets[hi]

        def relabel(z: int) -> int:
            if z == hi:
                z = lo
            return z - 1 if z > hi else z

        new_edges, new_wit = [], {}
        for (x, y) in edges:
            e = tuple(sorted((relabel(x), relabel(y))))
            new_edges.append(e)
            new_wit[e] = wit[(x, y)] - merged
        edges = sorted(new_edges)
        wit = new_wit
    out = StrongModel(
        build_graph(len(sets), edges), tuple(frozenset(s) for s in sets), {e: frozenset(w) for e, w in wit.items()}
    )
    validate_strong_model(g, out, k)
    return out


def _link_regions(g: Graph, region: list[set[int]]):
    """A walk from region 0 to some other region whose interior avoids all
    regions.  Returns ``((a, x), (b, y), walk)``."""
    where: dict[int, list[int]] = {}
    for a, reg in enumerate(region):
        for u in reg:
            where.setdefault(u, []).append(a)
    for u in sorted(region[0]):
        others = [b for b in where[u] if b != 0]
        if others:
            return (0, u), (others[0], u), [u]
    from collections import deque

    prev: dict[int, int] = {}
    queue = deque()
    for u in sorted(region[0]):
        prev[u] = u
        queue.append(u)
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in prev:
                continue
            prev[w] = u
            if w in where:
                walk = [w]
                while prev[walk[-1]] != walk[-1]:
                    walk.append(prev[walk[-1]])
                walk.reverse()
                return (0, walk[0]), (where[w][0], w), walk
            queue.append(w)
    return None


def _pattern_vertex_for(u: int, comp_index: int, comps, sets, wit) -> int:
    comp = comps[comp_index]
    for x in comp:
        if u in sets[x]:
            return x
    cs = set(comp)
    for (x, y), w in sorted(wit.items()):
        if x in cs and u in w:
            return x
    raise InternalConsistencyError(f"vertex {u} not found in component region")


def fat_minor_from_strong_model(g: Graph, sm: StrongModel, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> MinorModel:
    """A k-fat star or k-fat path model from a ``k(k+1)``-strong model of a
    pattern that contains ``K_{1,k}`` or ``P_k`` as a subgraph (star tried first).

    Along the chosen pattern subgraph, ``k + 1`` fresh witnesses are reserved
    per edge; one is absorbed into a branch set and the other ``k`` become the
    thickening vertices.
    """
    need = k * (k + 1)
    st = has_subgraph(sm.pattern, star(k), budgets) if sm.pattern.n >= k + 1 else None
    if st is not None:
        pairs = [(st[0], st[i]) for i in range(1, k + 1)]
        kind = "star"
    else:
        pt = has_subgraph(sm.pattern, path(k), budgets) if sm.pattern.n >= k else None
        if pt is None:
            raise InputError(f"pattern contains neither K_1,{k} nor P_{k} as a subgraph")
        pairs = [(pt[i], pt[i + 1]) for i in range(k - 1)]
        kind = "path"
    for a, b in pairs:
        have = len(sm.witness(a, b))
        if have < need:
            raise InputError(f"pattern edge ({a}, {b}) has {have} < k(k+1) = {need} witnesses")
    used: set[int] = set()
    reserved = []
    for a, b in pairs:
        pool = sorted(sm.witness(a, b) - used)[: k + 1]
        used |= set(pool)
        reserved.append(pool)
    x = sm.branch_sets
    if kind == "star":
        centre = st[0]
        branch = [x[centre]]
        thick = []
        for (_, leaf), pool in zip(pairs, reserved):
            branch.append(x[leaf] | {pool[0]})
            thick += [frozenset([u]) for u in pool[1:]]
        model = MinorModel(fat_star(k), tuple(branch + thick))
    else:
        branch = []
        thick = []
        for i, pool in enumerate(reserved):
            branch.append(x[pt[i]] | {pool[0]})
            thick += [frozenset([u]) for u in pool[1:]]
        branch.append(x[pt[k - 1]])
        model = MinorModel(fat_path(k), tuple(branch + thick))
    validate_model(g, model)
    return model


def disjoint_model_to_minor(g: Graph, sm: StrongModel, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> MinorModel:
    """k-fat star or k-fat path from a ``3k^k``-strong model of a pattern with at
    least ``k^k`` edges in a connected host.  The first ``k^k`` pattern edges
    are kept, components are merged, and the fat minor is read off."""
    target = k**k
    edges = sm.pattern.edges()
    if len(edges) < target:
        raise InputError(f"pattern has {len(edges)} < k^k = {target} edges")
    keep = edges[:target]
    trimmed = StrongModel(
        build_graph(sm.pattern.n, keep), sm.branch_sets, {e: sm.witnesses[e] for e in keep}
    )
    trimmed = _drop_isolated(trimmed)
    connected = make_connected_model(g, trimmed, k * k + k)
    return fat_minor_from_strong_model(g, connected, k, budgets)


# -- layered paths ---------------------------------------------------------------


def fan_from_layered_path(g: Graph, lay: BFSLayering, walk: Sequence[int], i: int, c: int, k: int) -> MinorModel:
    """k-fan model from a path inside layers ``i..i+c`` with at least
    ``k^(c+1)`` vertices.  If ``k`` path vertices lie in layer ``i`` the layers
    below contract to the apex; otherwise a long run one layer deeper exists."""
    walk = list(walk)
    if i < 1 or c < 0 or k < 1:
        raise InputError("fan_from_layered_path needs i >= 1, c >= 0, k >= 1")
    if len(walk) < k ** (c + 1):
        raise InputError(f"path has {len(walk)} < k^(c+1) = {k ** (c + 1)} vertices")
    if len(set(walk)) != len(walk) or any(not g.has_edge(a, b) for a, b in zip(walk, walk[1:])):
        raise InputError("vertex list is not a path of the graph")
    if any(not i <= lay.layer[u] <= i + c for u in walk):
        raise InputError(f"path leaves layers {i}..{i + c}")
    top = {u for u in walk if lay.layer[u] == i}
    if len(top) >= k:
        model = _fan_along(walk, top, frozenset(lay.union_below(i)), k)
        validate_model(g, model)
        return model
    if c == 0:
        raise InternalConsistencyError("single-layer path with fewer than k vertices")
    runs, cur = [], []
    for u in walk:
        if lay.layer[u] == i:
            if cur:
                runs.append(cur)
            cur = []
        else:
            cur.append(u)
    if cur:
        runs.append(cur)
    long = next((r for r in runs if len(r) >= k**c), None)
    if long is None:
        raise InternalConsistencyError("no long run below the top layer")
    return fan_from_layered_path(g, lay, long, i + 1, c - 1, k)


# -- 2-connected graphs with many high-degree vertices ------------------------------


def fat_star_from_high_pairs(g: Graph, v: int, blocks: Sequence[Sequence[int]], k: int) -> MinorModel:
    """k-fat star (or k-fan) from ``k`` blocks in which ``v`` has degree at least
    ``2k(k+1)``: in each block a connected ``X_i`` with ``k + 1`` neighbours of
    ``v`` attached."""
    if len(blocks) < k:
        raise InputError("need k blocks")
    branch = [frozenset([v])]
    thick = []
    for blk in list(blocks)[:k]:
        sub, old = g.induced(sorted(blk))
        res = one_high(sub, old.index(v), k, k + 1)
        if res.fan is not None:
            out = _lift(res.fan, old)
            validate_model(g, out)
            return out
        s = [old[u] for u in res.s]
        branch.append(frozenset(old[u] for u in res.x) | {s[0]})
        thick += [frozenset([u]) for u in s[1:]]
    out = MinorModel(fat_star(k), tuple(branch + thick))
    validate_model(g, out)
    return out


def two_connected_high(g: Graph, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> MinorModel | None:
    """A k-fan, k-fat-star or k-fat-path model when the 2-connected graph ``g``
    has at least ``(k+2) k^k`` vertices of degree at least ``d(k)``; ``None``
    when it has fewer."""
    if not is_biconnected(g):
        raise InputError("two_connected_high needs a 2-connected graph")
    d = high_degree_threshold(k)
    quota = (k + 2) * k**k
    high = [v for v in range(g.n) if g.degree(v) >= d]
    if len(high) < quota:
        return None
    a = high[:quota]
    rest, old = g.remove_vertices(a)
    comps = [[old[u] for u in comp] for comp in connected_components(rest)]
    where = {}
    for j, comp in enumerate(comps):
        for u in comp:
            where[u] = j
    heavy_bound = 6 * k ** (k + 1)
    counts = {}
    for v in a:
        for u in g.adj[v]:
            if u in where:
                counts[(v, where[u])] = counts.get((v, where[u]), 0) + 1
    heavy = sorted((v, j) for (v, j), cnt in counts.items() if cnt >= heavy_bound)
    per_comp: dict[int, list[int]] = {}
    for v, j in heavy:
        per_comp.setdefault(j, []).append(v)
    for j in sorted(per_comp):
        if len(per_comp[j]) >= k:
            vs = per_comp[j][:k]
            sub, sub_old = g.induced(sorted(set(comps[j]) | set(vs)))
            idx = {u: i for i, u in enumerate(sub_old)}
            out = _lift(many_high(sub, [idx[v] for v in vs], k), sub_old)
            validate_model(g, out)
            return out
    chosen = [(per_comp[j][0], j) for j in sorted(per_comp)]
    if len(chosen) >= k**k:
        ell = 3 * k**k
        hubs = sorted({v for v, _ in chosen})
        sets = [frozenset([v]) for v in hubs]
        edges, wit = [], {}
        for v, j in chosen:
            sub, sub_old = g.induced(sorted(set(comps[j]) | {v}))
            res = one_high(sub, sub_old.index(v), k, ell)
            if res.fan is not None:
                out = _lift(res.fan, sub_old)
                validate_model(g, out)
                return out
            sets.append(frozenset(sub_old[u] for u in res.x))
            e = (hubs.index(v), len(sets) - 1)
            edges.append(e)
            wit[e] = frozenset(sub_old[u] for u in res.s)
        sm = StrongModel(build_graph(len(sets), edges), tuple(sets), wit)
        validate_strong_model(g, sm, ell)
        return disjoint_model_to_minor(g, sm, k, budgets)
    # Few heavy pairs: contract each component of G - A to one vertex.
    na = len(a)
    pos = {v: i for i, v in enumerate(a)}
    cross = set()
    for v in a:
        for u in g.adj[v]:
            if u in where:
                cross.add((pos[v], na + where[u]))
    inner = [(pos[u], pos[w]) for u, w in g.edges() if u in pos and w in pos]
    contracted = build_graph(na + len(comps), sorted(cross) + inner)
    bip = build_graph(na + len(comps), sorted(cross))
    lonely = [v for v in a if not any(v == hv for hv, _ in heavy)]
    sm = find_forest(bip, range(na), 3 * k**k, len(lonely))
    inner_model = MinorModel(contracted, tuple([frozenset([v]) for v in a] + [frozenset(c) for c in comps]))
    validate_model(g, inner_model)
    out = compose(disjoint_model_to_minor(contracted, sm, k, budgets), inner_model)
    validate_model(g, out)
    return out


# -- rainbow cliques --------------------------------------------------------------


def rainbow_clique(g: Graph, colour: Sequence[int], size: int) -> tuple[int, ...] | None:
    """Lexicographically first clique of ``size`` vertices with pairwise distinct
    colours, or ``None``."""
    if len(colour) != g.n:
        raise InputError("colouring is not total")
    if size <= 0:
        return ()
    masks = g.masks
    by_colour: dict[int, int] = {}
    for v, col in enumerate(colour):
        by_colour[col] = by_colour.get(col, 0) | (1 << v)

    def extend(clique: list[int], cand: int) -> tuple[int, ...] | None:
        if len(clique) == size:
            return tuple(clique)
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            clique.append(u)
            found = extend(clique, cand & masks[u] & ~by_colour[colour[u]])
            if found is not None:
                return found
            clique.pop()
        return None

    return extend([], (1 << g.n) - 1)
