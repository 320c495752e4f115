"""Exhaustive subgraph, minor and strong-model search on small graphs.

All searches run on integer bitmasks.  They either return a witness, return
``None`` after exhausting the search space (a definitive "no"), or raise
``BudgetExceeded`` (indeterminate).
"""

from __future__ import annotations

from ..config import DEFAULT_BUDGETS, Budgets, Meter
from ..graph import Graph, connected_components
from .models import MinorModel, StrongModel


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _pattern_order(pattern: Graph) -> tuple[list[int], list[list[int]]]:
    """Search order over pattern vertices (connected-first, high degree first) and,
    for each position, the earlier positions adjacent to it."""
    n = pattern.n
    placed: list[int] = []
    pos = {}
    remaining = set(range(n))
    while remaining:
        best = max(
            remaining,
            key=lambda x: (sum(1 for y in pattern.adj[x] if y in pos), len(pattern.adj[x]), -x),
        )
        pos[best] = len(placed)
        placed.append(best)
        remaining.remove(best)
    back = [[pos[y] for y in pattern.adj[x] if pos[y] < pos[x]] for x in placed]
    return placed, back


class _SubgraphMatcher:
    """Reusable matcher for one pattern against many host states."""

    def __init__(self, pattern: Graph):
        self.pattern = pattern
        self.order, self.back = _pattern_order(pattern)
        self.pdeg = [len(pattern.adj[x]) for x in self.order]
        self.sorted_deg = sorted((len(a) for a in pattern.adj), reverse=True)

    def feasible(self, adj: list[int], alive: int) -> bool:
        """Cheap necessary conditions: sizes and degree-sequence domination."""
        hn = _popcount(alive)
        if hn < self.pattern.n:
            return False
        degs = sorted((_popcount(adj[v]) for v in _bits(alive)), reverse=True)
        if sum(degs) < 2 * self.pattern.m:
            return False
        return all(degs[i] >= d for i, d in enumerate(self.sorted_deg))

    def match(self, adj: list[int], alive: int, meter: Meter) -> list[int] | None:
        """Injective adjacency-preserving map pattern -> host, or None."""
        n = self.pattern.n
        if n == 0:
            return []
        if not self.feasible(adj, alive):
            return None
        maxd = max(self.pdeg)
        deg_ge = [0] * (maxd + 1)
        for v in _bits(alive):
            d = min(_popcount(adj[v]), maxd)
            for j in range(d + 1):
                deg_ge[j] |= 1 << v
        img = [0] * n
        order, back, pdeg = self.order, self.back, self.pdeg

        def rec(i: int, used: int) -> bool:
            if i == n:
                return True
            cand = deg_ge[pdeg[i]] & ~used
            for j in back[i]:
                cand &= adj[img[j]]
                if not cand:
                    return False
            while cand:
                low = cand & -cand
                cand ^= low
                meter.tick()
                img[i] = low.bit_length() - 1
                if rec(i + 1, used | low):
                    return True
            return False

        if not rec(0, 0):
            return None
        phi = [0] * n
        for i, x in enumerate(order):
            phi[x] = img[i]
        return phi


def has_subgraph(host: Graph, pattern: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> list[int] | None:
    """An injective map ``phi`` with ``phi[x]phi[y]`` a host edge for every pattern
    edge ``xy``, or ``None`` if none exists."""
    meter = Meter("has_subgraph", budgets.subgraph_nodes, budgets.seconds)
    return _SubgraphMatcher(pattern).match(list(host.masks), (1 << host.n) - 1, meter)


class _MinorSearch:
    def __init__(self, pattern: Graph, meter: Meter):
        self.pattern = pattern
        self.meter = meter
        self.matcher = _SubgraphMatcher(pattern)
        self.pn = pattern.n
        self.pm = pattern.m
        self.pcyc = pattern.m - pattern.n + len(connected_components(pattern)) if pattern.n else 0
        self.min_deg = min((len(a) for a in pattern.adj), default=0)
        self.seen: set[tuple[int, ...]] = set()

    def _reduce(self, adj: list[int], alive: int, block: list[int]) -> int:
        # Vertices of degree <= 1 never carry a minimal model of a pattern with
        # minimum degree >= 2; with minimum degree >= 3 a degree-2 vertex can be
        # contracted into either neighbour.
        if self.min_deg < 2:
            return alive
        changed = True
        while changed:
            changed = False
            for v in list(_bits(alive)):
                d = _popcount(adj[v])
                if d <= 1:
                    for w in _bits(adj[v]):
                        adj[w] &= ~(1 << v)
                    adj[v] = 0
                    alive &= ~(1 << v)
                    changed = True
                elif d == 2 and self.min_deg >= 3:
                    u = (adj[v] & -adj[v]).bit_length() - 1
                    alive = self._contract(adj, alive, block, u, v)
                    changed = True
        return alive

    @staticmethod
    def _contract(adj: list[int], alive: int, block: list[int], a: int, b: int) -> int:
        u, v = (a, b) if a < b else (b, a)
        merged = (adj[u] | adj[v]) & ~((1 << u) | (1 << v))
        for w in _bits(adj[v]):
            if w != u:
                adj[w] = (adj[w] & ~(1 << v)) | (1 << u)
        for w in _bits(adj[u]):
            if w != v:
                adj[w] |= 1 << u
        adj[u] = merged
        adj[v] = 0
        block[u] |= block[v]
        block[v] = 0
        return alive & ~(1 << v)

    def _cyclomatic(self, adj: list[int], alive: int) -> int:
        m = sum(_popcount(adj[v]) for v in _bits(alive)) // 2
        comps = 0
        rest = alive
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                x = frontier.bit_length() - 1
                frontier &= ~(1 << x)
                new = adj[x] & ~comp
                comp |= new
                frontier |= new
            rest &= ~comp
            comps += 1
        return m - _popcount(alive) + comps

    def run(self, adj: list[int], alive: int, block: list[int]) -> MinorModel | None:
        alive = self._reduce(adj, alive, block)
        key = tuple(block[v] for v in _bits(alive))
        if key in self.seen:
            return None
        self.seen.add(key)
        self.meter.tick()
        n = _popcount(alive)
        if n < self.pn:
            return None
        m = sum(_popcount(adj[v]) for v in _bits(alive)) // 2
        if m < self.pm or self._cyclomatic(adj, alive) < self.pcyc:
            return None
        phi = self.matcher.match(adj, alive, self.meter)
        if phi is not None:
            return MinorModel(self.pattern, tuple(frozenset(_bits(block[u])) for u in phi))
        if n == self.pn:
            return None
        for u in _bits(alive):
            for v in _bits(adj[u] & ~((1 << (u + 1)) - 1)):
                adj2 = adj[:]
                block2 = block[:]
                alive2 = self._contract(adj2, alive, block2, u, v)
                found = self.run(adj2, alive2, block2)
                if found is not None:
                    return found
        return None


def has_minor(host: Graph, pattern: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> MinorModel | None:
    """A minor model of ``pattern`` in ``host``, or ``None`` if there is none.

    Search: depth-first over edge contractions of the host, memoised on the
    induced vertex partition, testing subgraph containment at every state.
    Pruned by vertex/edge counts and cyclomatic number (neither can grow under
    taking minors).  A connected pattern is searched component by component.
    Raises ``BudgetExceeded`` when the node budget runs out.
    """
    meter = Meter("has_minor", budgets.minor_nodes, budgets.seconds)
    if pattern.n == 0:
        return MinorModel(pattern, ())
    if pattern.n > host.n or pattern.m > host.m:
        return None
    pcomps = connected_components(pattern)
    if len(pcomps) == 1:
        regions = [c for c in connected_components(host) if len(c) >= pattern.n]
    else:
        regions = [list(range(host.n))]
    for region in regions:
        search = _MinorSearch(pattern, meter)
        alive = 0
        for v in region:
            alive |= 1 << v
        adj = [host.masks[v] & alive if (alive >> v) & 1 else 0 for v in range(host.n)]
        block = [1 << v if (alive >> v) & 1 else 0 for v in range(host.n)]
        found = search.run(adj, alive, block)
        if found is not None:
            return found
    return None


def copies(pattern: Graph, p: int) -> Graph:
    """``p`` disjoint copies of ``pattern``."""
    from ..graph import disjoint_union

    return disjoint_union(*([pattern] * p)) if p > 0 else Graph(0, ())


# -- connected sets and strong models -----------------------------------------


def connected_sets(host: Graph, allowed: int | None = None, max_size: int | None = None) -> list[int]:
    """Every connected vertex subset (as a bitmask) inside ``allowed``, each once,
    ordered by size and then by mask."""
    masks = host.masks
    if allowed is None:
        allowed = (1 << host.n) - 1
    limit = host.n if max_size is None else max_size
    out: list[int] = []

    def rec(s: int, size: int, frontier: int, banned: int):
        out.append(s)
        if size == limit:
            return
        earlier = 0
        for w in list(_bits(frontier)):
            bit = 1 << w
            banned2 = banned | earlier
            s2 = s | bit
            frontier2 = (frontier | masks[w]) & allowed & ~s2 & ~banned2
            rec(s2, size + 1, frontier2, banned2)
            earlier |= bit

    for v in _bits(allowed):
        below = allowed & ((1 << v) - 1)
        rec(1 << v, 1, masks[v] & allowed & ~below & ~(1 << v), below)
    out.sort(key=lambda s: (_popcount(s), s))
    return out


def _closed_out(masks: tuple[int, ...], s: int) -> int:
    nb = 0
    for v in _bits(s):
        nb |= masks[v]
    return nb & ~s


def find_strong_model(
    host: Graph, pattern: Graph, k: int, budgets: Budgets = DEFAULT_BUDGETS
) -> StrongModel | None:
    """A ``k``-strong model of ``pattern`` in ``host`` or ``None``.

    Branch sets are tried smallest first.  A pattern edge whose two ends are
    placed prunes the branch as soon as fewer than ``k`` unused vertices are
    adjacent to both, since placing more branch sets only removes candidates.
    """
    meter = Meter("find_strong_model", budgets.strong_model_nodes, budgets.seconds)
    h = pattern.n
    if h == 0:
        return StrongModel(pattern, (), {})
    full = (1 << host.n) - 1
    reserve = k if pattern.m else 0
    max_size = host.n - (h - 1) - reserve
    if max_size < 1:
        return None
    cands = connected_sets(host, full, max_size)
    outs = {s: _closed_out(host.masks, s) for s in cands}
    order, back = _pattern_order(pattern)
    chosen = [0] * h
    edges = pattern.edges()

    def ok_edges(i: int, used: int) -> bool:
        for j in back[i]:
            common = outs[chosen[i]] & outs[chosen[j]] & ~used
            if _popcount(common) < k:
                return False
        return True

    def all_edges_ok(used: int) -> bool:
        return all(_popcount(outs[chosen[a]] & outs[chosen[b]] & ~used) >= k for a, b in placed_edges)

    placed_edges: list[tuple[int, int]] = []

    def rec(i: int, used: int) -> bool:
        if i == h:
            return True
        for s in cands:
            if s & used:
                continue
            meter.tick()
            chosen[i] = s
            u2 = used | s
            if not ok_edges(i, u2):
                continue
            new_edges = [(i, j) for j in back[i]]
            placed_edges.extend(new_edges)
            if all_edges_ok(u2) and rec(i + 1, u2):
                return True
            del placed_edges[len(placed_edges) - len(new_edges):]
        return False

    if not rec(0, 0):
        return None
    sets = [0] * h
    for i, x in enumerate(order):
        sets[x] = chosen[i]
    used = 0
    for s in sets:
        used |= s
    witnesses = {}
    for a, b in edges:
        witnesses[(a, b)] = frozenset(_bits(outs[sets[a]] & outs[sets[b]] & ~used))
    return StrongModel(pattern, tuple(frozenset(_bits(s)) for s in sets), witnesses)
