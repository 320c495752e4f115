"""Colouring procedures for graphs excluding small minors.

Palettes are allocated by interval arithmetic so the colour count of every
output can be audited:

* ``heart_colouring(h)``: layer ``i`` uses the block starting at
  ``(i % 2) * (2^(h-1) - 1)``; inside a block colour 0 is the hitting set and
  the recursive colouring of the rest is shifted by one.  The BFS root takes
  colour 0 of the even block.
* ``weak_closure_colouring(h)``: with ``f = f(h-1)``, layer ``i`` uses the
  block starting at ``(i % 2) * (2f + 1)``; inside it colour 0 is the shared
  set ``X``, ``1..f`` colour side ``A`` and ``f+1..2f`` colour side ``B``.
"""

from __future__ import annotations

import math

from ..config import DEFAULT_BUDGETS, BudgetExceeded, Budgets, InputError, InternalConsistencyError
from ..depth import treewidth_exact
from ..generators import closure_tree, complete_kary_tree, weak_closure_tree
from ..graph import Graph, bfs_layering, block_decomposition, connected_components, is_biconnected
from ..minors.extract import fat_star_from_high_pairs, high_degree_threshold, two_connected_high
from ..minors.models import MinorModel, validate_model
from ..minors.search import copies, has_minor
from ..minors.split import split_weak_model
from .core import Colouring, ColourOrWitness, Witness, verify_clustering


def _pattern_kind(model: MinorModel, k: int) -> str:
    from ..generators import fan, fat_path, fat_star

    for name, make in (("fan", fan), ("fat_star", fat_star), ("fat_path", fat_path)):
        p = make(k)
        if p.n == model.pattern.n and p.edges() == model.pattern.edges():
            return name
    return "minor"


def _lift_model(model: MinorModel, old) -> MinorModel:
    return MinorModel(model.pattern, tuple(frozenset(old[v] for v in s) for s in model.branch_sets))


# -- parity and 2-colourings ------------------------------------------------------


def parity_colouring(g: Graph, r: int) -> Colouring:
    """Colour each vertex by the parity of its distance from ``r``."""
    lay = bfs_layering(g, r)
    return Colouring(tuple(d % 2 for d in lay.layer), {"root": r})


def two_colour_bound_holds(value: int, k: int) -> bool:
    """Whether ``value <= k * d^(k^(3(k+2)k^k))`` without building the right side."""
    if value <= k:
        return True
    d = high_degree_threshold(k)
    exponent = k ** (3 * (k + 2) * k**k)
    return math.log(value / k) <= exponent * math.log(d)


def two_colour_2connected(
    g: Graph, k: int, r: int, degree_threshold: int | None = None, budgets: Budgets = DEFAULT_BUDGETS
) -> ColourOrWitness:
    """2-colouring of a 2-connected graph (a single edge or vertex also counts).

    With no high-degree vertex this is the parity colouring from ``r``.
    Otherwise high-degree vertices are black, low-degree vertices in layers
    holding a high-degree vertex are white, and each maximal run
    ``V_i..V_{i+c}`` of other layers alternates white/black starting white,
    with ``V_{i+c}`` forced white when ``c`` is odd.  Too many high-degree
    vertices give a witness minor instead.  ``degree_threshold`` overrides
    ``d(k)`` (used to exercise the high-degree branch on small graphs).
    """
    if not is_biconnected(g):
        raise InputError("two_colour_2connected needs a 2-connected graph")
    d = high_degree_threshold(k) if degree_threshold is None else degree_threshold
    high = [v for v in range(g.n) if g.degree(v) >= d]
    lay = bfs_layering(g, r)
    if not high:
        col = parity_colouring(g, r)
        return Colouring(col.colour, {"branch": "parity", "high": 0, "root": r})
    if len(high) >= (k + 2) * k**k:
        if degree_threshold is not None:
            raise InputError("threshold override cannot be combined with the many-high-degree branch")
        model = two_connected_high(g, k, budgets)
        return Witness(_pattern_kind(model, k), model)
    hs = set(high)
    marked = {lay.layer[v] for v in high}
    depth = len(lay.layers)
    colour_of_layer: dict[int, int] = {}
    i = 0
    while i < depth:
        if i in marked:
            i += 1
            continue
        j = i
        while j + 1 < depth and j + 1 not in marked:
            j += 1
        c = j - i
        for t in range(i, j + 1):
            colour_of_layer[t] = 0 if (t - i) % 2 == 0 else 1
        if c % 2 == 1:
            colour_of_layer[j] = 0
        i = j + 1
    colour = []
    for v in range(g.n):
        if v in hs:
            colour.append(1)
        elif lay.layer[v] in marked:
            colour.append(0)
        else:
            colour.append(colour_of_layer[lay.layer[v]])
    return Colouring(tuple(colour), {"branch": "layered", "high": len(high), "root": r})


def two_colour(g: Graph, k: int, degree_threshold: int | None = None, budgets: Budgets = DEFAULT_BUDGETS) -> ColourOrWitness:
    """2-colouring of any graph, block by block.

    Components are rooted at their least vertex.  Blocks are coloured by
    non-decreasing distance of their root from the component root, and each
    block's two colours are swapped if needed to agree at its root.  A vertex
    that is high-degree in ``k`` blocks yields a fat-star (or fan) witness.
    """
    d = high_degree_threshold(k) if degree_threshold is None else degree_threshold
    colour = [-1] * g.n
    for comp in connected_components(g):
        sub, old = g.induced(comp)
        forest = block_decomposition(sub, 0)
        pairs: dict[int, list[int]] = {}
        for bi, blk in enumerate(forest.blocks):
            bset = set(blk)
            for v in blk:
                if sum(1 for w in sub.adj[v] if w in bset) >= d:
                    pairs.setdefault(v, []).append(bi)
        for v in sorted(pairs):
            if len(pairs[v]) >= k:
                if degree_threshold is not None:
                    raise InputError("threshold override cannot be combined with the high-degree-pair branch")
                blocks = [forest.blocks[bi] for bi in pairs[v][:k]]
                model = _lift_model(fat_star_from_high_pairs(sub, v, blocks, k), old)
                validate_model(g, model)
                return Witness(_pattern_kind(model, k), model)
        for blk, root in zip(forest.blocks, forest.block_root):
            bg, bold = sub.induced(blk)
            got = two_colour_2connected(bg, k, bold.index(root), degree_threshold, budgets)
            if isinstance(got, Witness):
                model = _lift_model(_lift_model(got.model, bold), old)
                validate_model(g, model)
                return Witness(got.kind, model)
            local = list(got.colour)
            want = colour[old[root]]
            if want >= 0 and local[bold.index(root)] != want:
                local = [1 - c for c in local]
            for x, c in zip(bold, local):
                gv = old[x]
                if colour[gv] < 0:
                    colour[gv] = c
                elif colour[gv] != c:
                    raise InternalConsistencyError(f"vertex {gv} recoloured across blocks")
    return Colouring(tuple(colour), {"k": k})


# -- hitting sets and the layered recursions ------------------------------------------------


def erdos_posa_hitting_set(
    g: Graph, h: Graph, p: int, w: int, check_preconditions: bool = True, budgets: Budgets = DEFAULT_BUDGETS
) -> list[int]:
    """A minimum set ``X`` with no ``h`` minor in ``g - X``.

    Iterative deepening on ``|X|``; at each node one model of ``h`` in the
    current graph is found and some vertex of it must join ``X``.  The result
    is checked against ``|X| <= p * w * (components of h)``.
    """
    if p < 1 or w < 1 or h.n == 0:
        raise InputError("need p, w >= 1 and a nonempty pattern")
    if check_preconditions:
        tw = treewidth_exact(g, budgets)
        if tw > w:
            raise InputError(f"treewidth {tw} exceeds w = {w}")
        packed = has_minor(g, copies(h, p), budgets)
        if packed is not None:
            raise InputError(f"graph contains {p} disjoint copies of the pattern as a minor")
    bound = p * w * len(connected_components(h))

    def search(removed: list[int], budget: int, seen: set) -> list[int] | None:
        key = tuple(removed)
        if key in seen:
            return None
        seen.add(key)
        rest, old = g.remove_vertices(removed)
        model = has_minor(rest, h, budgets)
        if model is None:
            return list(removed)
        if budget == 0:
            return None
        for v in sorted(old[u] for u in model.vertices()):
            found = search(sorted(removed + [v]), budget - 1, seen)
            if found is not None:
                return found
        return None

    for size in range(g.n + 1):
        found = search([], size, set())
        if found is not None:
            if len(found) > bound:
                raise InternalConsistencyError(f"hitting set of size {len(found)} exceeds p*w*c = {bound}")
            return sorted(found)
    raise InternalConsistencyError("deleting every vertex must remove the pattern")


def heart_colouring(
    g: Graph, h: int, k: int, w: int, check_preconditions: bool = True, budgets: Budgets = DEFAULT_BUDGETS
) -> Colouring:
    """(2^h - 2)-colouring with clustering ``k * w`` of a graph of treewidth at
    most ``w`` with no closure(T(h, k)) minor."""
    if h < 1 or k < 1 or w < 1:
        raise InputError("heart_colouring needs h, k, w >= 1")
    if check_preconditions:
        tw = treewidth_exact(g, budgets)
        if tw > w:
            raise InputError(f"treewidth {tw} exceeds w = {w}")
        model = has_minor(g, closure_tree(h, k), budgets)
        if model is not None:
            raise InputError(f"graph contains closure(T({h},{k})) as a minor: {model.as_lists()}")
    col = _heart(g, h, k, w, budgets)
    rep = verify_clustering(g, col)
    if rep.num_colours > 2**h - 2 or rep.max_component > k * w:
        raise InternalConsistencyError(f"heart colouring broke its bound: {rep.num_colours} colours, clustering {rep.max_component}")
    return Colouring(col, {"h": h, "k": k, "w": w})


def _heart(g: Graph, h: int, k: int, w: int, budgets: Budgets) -> tuple[int, ...]:
    if g.n == 0:
        return ()
    if h == 1:
        raise InternalConsistencyError("nonempty graph reached depth 1 of the recursion")
    block = 2 ** (h - 1) - 1
    colour = [-1] * g.n
    inner = closure_tree(h - 1, k)
    for comp in connected_components(g):
        sub, old = g.induced(comp)
        lay = bfs_layering(sub, 0)
        colour[old[0]] = 0
        for i in range(1, len(lay.layers)):
            layer_graph, lold = sub.induced(lay.layers[i])
            x = erdos_posa_hitting_set(layer_graph, inner, k, w, check_preconditions=False, budgets=budgets)
            base = (i % 2) * block
            rest, rold = layer_graph.remove_vertices(x)
            sub_col = _heart(rest, h - 1, k, w, budgets)
            for u in x:
                colour[old[lold[u]]] = base
            for u, c in zip(rold, sub_col):
                colour[old[lold[u]]] = base + 1 + c
    return tuple(colour)


def weak_closure_colours(h: int) -> int:
    """f(h) = (4^h - 4) / 6."""
    return (4**h - 4) // 6


def _weak_closure_size(h: int, k: int) -> int:
    return h if k == 1 else (k**h - 1) // (k - 1)


def _packing(g: Graph, h: int, arity: int, s: int, budgets: Budgets) -> MinorModel | None:
    """Model of ``s`` disjoint copies of W(h, arity) in ``g``, or ``None``."""
    if s * _weak_closure_size(h, arity) > g.n:
        return None
    return has_minor(g, copies(weak_closure_tree(h, arity), s), budgets)


def _subtree_order(tree, top: int) -> list[int]:
    out, frontier = [], [top]
    while frontier:
        out.extend(frontier)
        frontier = [c for v in frontier for c in tree.children[v]]
    return out


def weak_closure_colouring(g: Graph, h: int, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> ColourOrWitness:
    """An f(h)-colouring or a W(h, k) minor witness.

    Every minor test inside the recursion is exhaustive, so this is for small
    graphs only (``budgets.weak_closure_vertices``).
    """
    if h < 1 or k < 1:
        raise InputError("weak_closure_colouring needs h, k >= 1")
    if g.n > budgets.weak_closure_vertices:
        raise BudgetExceeded(f"weak_closure_colouring on {g.n} vertices (limit {budgets.weak_closure_vertices})")
    got = _wcc(g, h, k, budgets)
    if isinstance(got, Witness):
        validate_model(g, got.model)
        return got
    rep = verify_clustering(g, got)
    if rep.num_colours > weak_closure_colours(h):
        raise InternalConsistencyError(f"used {rep.num_colours} > f({h}) colours")
    return Colouring(got, {"h": h, "k": k})


def _wcc(g: Graph, h: int, k: int, budgets: Budgets):
    if g.n == 0:
        return ()
    if h == 1:
        return Witness("weak_closure", MinorModel(weak_closure_tree(1, k), (frozenset([0]),)))
    f_prev = weak_closure_colours(h - 1)
    block = 2 * f_prev + 1
    colour = [-1] * g.n
    for comp in connected_components(g):
        sub, old = g.induced(comp)
        lay = bfs_layering(sub, 0)
        colour[old[0]] = 0
        for i in range(1, len(lay.layers)):
            layer_graph, lold = sub.induced(lay.layers[i])
            s, packing = 0, None
            for t in range(k, 0, -1):
                packing = _packing(layer_graph, h - 1, max(1, 6 ** (k - t)) * k, t, budgets)
                if packing is not None:
                    s = t
                    break
            base = (i % 2) * block
            to_global = [old[lold[u]] for u in range(layer_graph.n)]
            if s >= k:
                return Witness("weak_closure", _apex_model(g, sub, old, lay, i, lold, packing, h, k))
            if s == 0:
                got = _wcc(layer_graph, h - 1, 6 ** (k - 1) * k, budgets)
                if isinstance(got, Witness):
                    raise InternalConsistencyError("layer without a packing produced a witness")
                for u, c in enumerate(got):
                    colour[to_global[u]] = base + 1 + c
                continue
            part = _weak_closure_size(h - 1, 6 ** (k - s) * k)
            firsts, seconds, shared = set(), set(), set()
            for j in range(s):
                sets = packing.branch_sets[j * part:(j + 1) * part]
                if h - 1 == 1:
                    (only,) = sets
                    firsts |= only
                    seconds |= only
                    shared |= only
                    continue
                piece = MinorModel(weak_closure_tree(h - 1, 6 ** (k - s) * k), tuple(sets))
                res = split_weak_model(layer_graph, piece, h - 1, 6 ** (k - s - 1) * k)
                firsts |= res.first.vertices
                seconds |= res.second.vertices
                shared |= res.shared
            a_keep = [u for u in range(layer_graph.n) if u not in firsts]
            b_keep = [u for u in range(layer_graph.n) if u not in seconds]
            smaller = 6 ** (k - s - 1) * k
            for keep, offset, skip in ((a_keep, 1, set()), (b_keep, 1 + f_prev, set(a_keep))):
                side, sold = layer_graph.induced(keep)
                got = _wcc(side, h - 1, smaller, budgets)
                if isinstance(got, Witness):
                    raise InternalConsistencyError("side of a split produced a witness")
                for u, c in zip(sold, got):
                    if u not in skip:
                        colour[to_global[u]] = base + offset + c
            for u in shared:
                colour[to_global[u]] = base
            if any(colour[to_global[u]] < 0 for u in range(layer_graph.n)):
                raise InternalConsistencyError("layer vertex left uncoloured")
    return tuple(colour)


def _apex_model(g, sub, old, lay, i, lold, packing, h, k) -> MinorModel:
    """W(h, k) model: layers below ``i`` form the root, the packed copies of
    W(h-1, k) in layer ``i`` form the subtrees of its children."""
    tree = complete_kary_tree(h, k)
    part = _weak_closure_size(h - 1, k)
    sets: list[frozenset[int]] = [frozenset()] * tree.n
    sets[0] = frozenset(old[v] for v in lay.union_below(i))
    for j, top in enumerate(tree.children[0]):
        nodes = _subtree_order(tree, top)
        for t, node in enumerate(nodes):
            sets[node] = frozenset(old[lold[u]] for u in packing.branch_sets[j * part + t])
    model = MinorModel(weak_closure_tree(h, k), tuple(sets))
    validate_model(g, model)
    return model
