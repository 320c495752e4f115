"""Experiment suites.  Each suite returns claims with measured values.

Every random choice is drawn from ``SplitMix64`` streams seeded from the
suite seed, so a rerun with the same seed and budgets reproduces the claims
byte for byte.  Budget overruns become ``indeterminate`` claims.
"""

from __future__ import annotations

import dataclasses
import time
from typing import Callable

from ..colouring import (
    Colouring,
    chromatic_number,
    cluster_colourings,
    defect_oracle,
    erdos_posa_hitting_set,
    heart_colouring,
    optimal_cluster_colouring,
    two_colour,
    two_colour_bound_holds,
    verify_clustering,
)
from ..config import DEFAULT_BUDGETS, BudgetExceeded, Budgets, InputError
from ..depth import treewidth_exact
from ..generators import (
    SplitMix64,
    bowtie,
    closure_tree,
    complete,
    complete_bipartite,
    cycle,
    fan,
    fat_path,
    fat_star,
    maximal_cliques,
    path,
    random_graph,
    random_tree,
    star,
    ternary_lower_bound,
    weak_closure_tree,
    x_family,
    x_prime,
)
from ..graph import Graph, build_graph, connected_components
from ..minors import copies, has_minor, has_subgraph, high_degree_threshold, rainbow_clique, validate_model
from .report import FAIL, INDETERMINATE, PASS, Claim, SuiteReport


class UnknownSuiteError(InputError):
    """Usage error: the suite name is not registered."""


@dataclasses.dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    budgets: Budgets = DEFAULT_BUDGETS

    def as_dict(self) -> dict:
        return {"seed": self.seed, "budgets": dataclasses.asdict(self.budgets)}


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _sub_seed(seed: int, *tags: int) -> int:
    """Deterministic child seed: one SplitMix64 step per tag."""
    x = seed
    for t in tags:
        x = SplitMix64(x * 1_000_003 + t).next_u64()
    return x


def _union(parts: list[Graph]) -> Graph:
    edges, off = [], 0
    for p in parts:
        edges += [(u + off, v + off) for u, v in p.edges()]
        off += p.n
    return build_graph(off, edges)


# -- thresholds -------------------------------------------------------------------------


def suite_thresholds(cfg: SuiteConfig) -> list[Claim]:
    claims = []

    def at_least(cid, label, g, c, bound=3):
        try:
            k, _ = optimal_cluster_colouring(g, c, cfg.budgets)
        except BudgetExceeded:
            return Claim(cid, label, f"≥{bound}", None, INDETERMINATE)
        return Claim(cid, label, f"≥{bound}", k, _status(k >= bound))

    for c in (1, 2):
        claims.append(at_least(f"fan-c{c}", "fan lower bound", fan(c * c + c), c))
        claims.append(at_least(f"fat-star-c{c}", "fat-star lower bound", fat_star(max(c, 1)), c))
        claims.append(at_least(f"fat-path-c{c}", "fat-path lower bound", fat_path(2 * c - 1), c))
        if c >= 2:
            g = fan(c * c + c - 1)
            try:
                k, _ = optimal_cluster_colouring(g, c, cfg.budgets)
                claims.append(Claim(f"fan-below-c{c}", "fan upper threshold", "=2", k, _status(k == 2)))
            except BudgetExceeded:
                claims.append(Claim(f"fan-below-c{c}", "fan upper threshold", "=2", None, INDETERMINATE))
    return claims


# -- ternary lower bound ---------------------------------------------------------------------

TERNARY_PAIRS = ((2, 1), (2, 2), (2, 3), (3, 1))


def suite_ternary(cfg: SuiteConfig) -> list[Claim]:
    claims = []
    for k, c in TERNARY_PAIRS:
        g = ternary_lower_bound(k, c, cfg.budgets)
        exact = (k, c) == (3, 1)
        expected = "=4" if exact else f"≥{2 * k - 2}"
        try:
            got, _ = optimal_cluster_colouring(g, c, cfg.budgets)
            ok = got == 4 if exact else got >= 2 * k - 2
            claims.append(Claim(f"ternary-k{k}-c{c}-colours", "ternary family colour lower bound", expected, got, _status(ok)))
        except BudgetExceeded:
            claims.append(Claim(f"ternary-k{k}-c{c}-colours", "ternary family colour lower bound", expected, None, INDETERMINATE))
        claims.append(_minor_claim(f"ternary-k{k}-c{c}-minor", "ternary family excludes closure(T(k,3))", g, closure_tree(k, 3), False, cfg))
    return claims


def _minor_claim(cid: str, label: str, host: Graph, pattern: Graph, want: bool, cfg: SuiteConfig) -> Claim:
    expected = "yes" if want else "no"
    try:
        model = has_minor(host, pattern, cfg.budgets)
    except BudgetExceeded:
        return Claim(cid, label, expected, "indeterminate", INDETERMINATE)
    if model is not None:
        validate_model(host, model)
    got = "yes" if model is not None else "no"
    return Claim(cid, label, expected, got, _status(got == expected))


# -- weak closure versus closure -------------------------------------------------------------

WEAKSTRONG_PAIRS = ((2, 2), (2, 3), (3, 2), (3, 3))


def suite_weakstrong(cfg: SuiteConfig) -> list[Claim]:
    return [
        _minor_claim(
            f"weak-h{h}-k{k}",
            "weak closure of T(h,k) has closure of T(h,k-1) as a minor",
            weak_closure_tree(h, k),
            closure_tree(h, k - 1),
            True,
            cfg,
        )
        for h, k in WEAKSTRONG_PAIRS
    ]


# -- heart colouring on certified inputs ------------------------------------------------------

HEART_PARAMS = ((2, 3, 1), (2, 3, 2), (3, 2, 2))
HEART_GRAPHS = 20


def _heart_candidate(h: int, k: int, w: int, seed: int) -> Graph:
    rng = SplitMix64(seed)
    kind = rng.below(3)
    if w == 1 or kind == 0:
        n = 3 + rng.below(10)
        return random_tree(n, 2 + rng.below(3), rng.next_u64())
    if kind == 1:
        n = 5 + rng.below(5)
        return random_graph(n, 0.2 + 0.05 * rng.below(4), rng.next_u64())
    parts = []
    for _ in range(1 + rng.below(3)):
        size = 3 + rng.below(6)
        parts.append(cycle(size) if rng.below(2) else path(size))
    return _union(parts)


def heart_inputs(h: int, k: int, w: int, seed: int, count: int, budgets: Budgets, max_tries: int = 2000) -> list[Graph]:
    """``count`` seeded graphs of treewidth at most ``w`` with no closure(T(h,k))
    minor, both certified by the exact oracles."""
    pattern = closure_tree(h, k)
    out = []
    for t in range(max_tries):
        g = _heart_candidate(h, k, w, _sub_seed(seed, h, k, w, t))
        if g.n > budgets.treewidth_vertices or treewidth_exact(g, budgets) > w:
            continue
        if has_minor(g, pattern, budgets) is not None:
            continue
        out.append(g)
        if len(out) == count:
            break
    return out


def suite_heart(cfg: SuiteConfig) -> list[Claim]:
    claims = []
    for h, k, w in HEART_PARAMS:
        cid = f"heart-h{h}-k{k}-w{w}"
        expected = f"{HEART_GRAPHS} graphs, colours ≤{2**h - 2}, clustering ≤{k * w}"
        try:
            graphs = heart_inputs(h, k, w, cfg.seed, HEART_GRAPHS, cfg.budgets)
            worst_colours = worst_cluster = 0
            for g in graphs:
                col = heart_colouring(g, h, k, w, check_preconditions=False, budgets=cfg.budgets)
                rep = verify_clustering(g, col)
                worst_colours = max(worst_colours, rep.num_colours)
                worst_cluster = max(worst_cluster, rep.max_component)
        except BudgetExceeded:
            claims.append(Claim(cid, "heart colouring bound", expected, None, INDETERMINATE))
            continue
        ok = len(graphs) >= HEART_GRAPHS and worst_colours <= 2**h - 2 and worst_cluster <= k * w
        observed = {"graphs": len(graphs), "max_colours": worst_colours, "max_clustering": worst_cluster}
        claims.append(Claim(cid, "heart colouring bound", expected, observed, _status(ok)))
    return claims


# -- two-colouring of pattern-free graphs -----------------------------------------------------

TWO_COLOUR_K = 3
BRUTE_FORCE_VERTICES = 13


def _bowtie_chain(m: int) -> Graph:
    """``m`` triangles glued in a row, consecutive triangles sharing one vertex."""
    edges, nxt, joint = [], 1, 0
    for _ in range(m):
        a, b = nxt, nxt + 1
        edges += [(joint, a), (joint, b), (a, b)]
        joint, nxt = b, nxt + 2
    return build_graph(nxt, edges)


def twocolour_families(seed: int) -> dict[str, list[Graph]]:
    trees = []
    for t in range(20):
        rng = SplitMix64(_sub_seed(seed, 7, t))
        trees.append(random_tree(5 + rng.below(26), 2 + rng.below(4), rng.next_u64()))
    return {
        "cycles": [cycle(n) for n in range(3, 31)],
        "stars": [star(n) for n in range(1, 31)],
        "trees": trees,
        "bowties": [bowtie()] + [_bowtie_chain(m) for m in range(1, 7)],
    }


def pattern_free_certificate(g: Graph, k: int, budgets: Budgets) -> str | None:
    """Why ``g`` has none of fan(k), fat_star(k), fat_path(k) as a minor.

    Returns ``"brute-force"``, ``"acyclic"``, ``"max-degree-2"``, or ``None``
    when a pattern is present.  Every pattern has a cycle and a vertex of
    degree at least 3, and those two properties are closed under minors.
    """
    if g.n <= BRUTE_FORCE_VERTICES:
        for pat in (fan(k), fat_star(k), fat_path(k)):
            if has_minor(g, pat, budgets) is not None:
                return None
        return "brute-force"
    if g.m == g.n - len(connected_components(g)):
        return "acyclic"
    if max((g.degree(v) for v in range(g.n)), default=0) <= 2:
        return "max-degree-2"
    raise BudgetExceeded(f"no certificate for a {g.n}-vertex graph")


def suite_twocolour(cfg: SuiteConfig) -> list[Claim]:
    k = TWO_COLOUR_K
    bound = high_degree_threshold(k) ** k
    claims = []
    for name, graphs in sorted(twocolour_families(cfg.seed).items()):
        cid = f"twocolour-{name}"
        expected = "≤2 colours, verified clustering, parity clustering ≤d^k"
        try:
            certs = [pattern_free_certificate(g, k, cfg.budgets) for g in graphs]
        except BudgetExceeded:
            claims.append(Claim(cid, "two-colouring of pattern-free graphs", expected, None, INDETERMINATE))
            continue
        worst_colours = worst_cluster = parity_runs = 0
        ok = all(c is not None for c in certs)
        for g in graphs:
            col = two_colour(g, k, budgets=cfg.budgets)
            if not isinstance(col, Colouring):
                ok = False
                continue
            rep = verify_clustering(g, col)
            worst_colours = max(worst_colours, rep.num_colours)
            worst_cluster = max(worst_cluster, rep.max_component)
            ok &= rep.num_colours <= 2 and two_colour_bound_holds(rep.max_component, k)
            # no vertex reaches d(3) here, so every block takes the parity branch
            if all(g.degree(v) < high_degree_threshold(k) for v in range(g.n)):
                parity_runs += 1
                ok &= rep.max_component <= bound
        observed = {
            "graphs": len(graphs),
            "certificates": sorted(set(c for c in certs if c)),
            "max_colours": worst_colours,
            "max_clustering": worst_cluster,
            "parity_runs": parity_runs,
        }
        claims.append(Claim(cid, "two-colouring of pattern-free graphs", expected, observed, _status(ok)))
    return claims


# -- extremal family --------------------------------------------------------------------------

RAINBOW_PAIRS = ((1, 1), (1, 2), (2, 1), (3, 1))
SMALL_MEMBER = 11


def small_members(k: int, c: int, budgets: Budgets) -> list[Graph]:
    return [g for g in x_family(k, c, 10_000, budgets) if g.n <= SMALL_MEMBER]


def suite_rainbow(cfg: SuiteConfig) -> list[Claim]:
    claims = []
    for k, c in RAINBOW_PAIRS:
        cid = f"rainbow-k{k}-c{c}"
        expected = f"colours ≥{k + 1}" + (f"; rainbow K_{k + 1} in every proper colouring" if c == 1 else "")
        try:
            members = small_members(k, c, cfg.budgets)
            least = None
            misses = checked = 0
            for g in members:
                got, _ = optimal_cluster_colouring(g, c, cfg.budgets)
                least = got if least is None else min(least, got)
                if c == 1:
                    for col in cluster_colourings(g, g.n, 1, cfg.budgets):
                        checked += 1
                        if rainbow_clique(g, col.colour, k + 1) is None:
                            misses += 1
        except BudgetExceeded:
            claims.append(Claim(cid, "extremal family lower bound", expected, None, INDETERMINATE))
            continue
        observed = {"members": len(members), "min_colours": least, "colourings_checked": checked, "rainbow_misses": misses}
        ok = (least is None or least >= k + 1) and misses == 0
        claims.append(Claim(cid, "extremal family lower bound", expected, observed, _status(ok)))
    return claims


def suite_appendix(cfg: SuiteConfig) -> list[Claim]:
    claims = []
    for k in (1, 2, 3):
        for c in (1, 2):
            members = small_members(k, c, cfg.budgets)
            bad = sum(1 for g in members if min(len(q) for q in maximal_cliques(g)) < k + 1)
            claims.append(
                Claim(
                    f"clique-extension-k{k}-c{c}",
                    "every clique extends to a (k+1)-clique",
                    "0 violations",
                    {"members": len(members), "violations": bad},
                    _status(bad == 0),
                )
            )
    for c in (1, 2, 3):
        members = x_family(2, c, 10_000, cfg.budgets)
        try:
            bad = sum(1 for g in members if has_subgraph(g, complete_bipartite(1, c), cfg.budgets) is None)
        except BudgetExceeded:
            claims.append(Claim(f"star-subgraph-c{c}", "level-2 members contain K_{1,c}", "0 violations", None, INDETERMINATE))
            continue
        claims.append(
            Claim(
                f"star-subgraph-c{c}",
                "level-2 members contain K_{1,c}",
                "0 violations",
                {"members": len(members), "violations": bad},
                _status(bad == 0),
            )
        )
    for c in (1, 2, 3, 4):
        claims.append(_minor_claim(f"path-claw-free-c{c}", "P_{c+1} has no K_{1,3} minor", path(c + 1), star(3), False, cfg))
    # the dominant-vertex extension of a path has no K_{2,3} minor
    for c in (1, 2):
        claims.append(
            _minor_claim(f"fan-k23-free-c{c}", "level-2 path member has no K_{2,3} minor", x_prime(path(c + 1), c), complete_bipartite(2, 3), False, cfg)
        )
    return claims


# -- oracle consistency and hitting sets ------------------------------------------------------

ORACLE_GRAPHS = 100
EP_INSTANCES = 30
EP_PATTERNS = (("K2", complete(2)), ("K3", complete(3)), ("P3", path(3)), ("claw", star(3)), ("C4", cycle(4)), ("2K2", _union([complete(2), complete(2)])))


def oracle_graphs(seed: int, count: int = ORACLE_GRAPHS) -> list[Graph]:
    out = []
    for t in range(count):
        rng = SplitMix64(_sub_seed(seed, 11, t))
        n = 3 + rng.below(7)
        out.append(random_graph(n, 0.2 + 0.1 * rng.below(6), rng.next_u64()))
    return out


def ep_instances(seed: int, budgets: Budgets, count: int = EP_INSTANCES):
    """``(G, name, H, p, w)`` with treewidth ``<= w`` and no ``p`` disjoint ``H`` minors."""
    out = []
    t = 0
    while len(out) < count:
        rng = SplitMix64(_sub_seed(seed, 13, t))
        t += 1
        g = random_graph(5 + rng.below(4), 0.25 + 0.05 * rng.below(5), rng.next_u64())
        name, h = EP_PATTERNS[rng.below(len(EP_PATTERNS))]
        w = max(1, treewidth_exact(g, budgets))
        p = 1 + rng.below(2)
        while has_minor(g, copies(h, p), budgets) is not None:
            p += 1
        out.append((g, name, h, p, w))
    return out


def suite_oracles(cfg: SuiteConfig) -> list[Claim]:
    claims = []
    graphs = oracle_graphs(cfg.seed)
    try:
        for c in (1, 2, 3):
            bad = 0
            for g in graphs:
                clustered, _ = optimal_cluster_colouring(g, c, cfg.budgets)
                if defect_oracle(g, c - 1, cfg.budgets) > clustered:
                    bad += 1
            claims.append(
                Claim(f"defect-le-cluster-c{c}", "defect oracle never exceeds clustered oracle", "0 violations",
                      {"graphs": len(graphs), "violations": bad}, _status(bad == 0))
            )
        bad = sum(1 for g in graphs if optimal_cluster_colouring(g, 1, cfg.budgets)[0] != chromatic_number(g))
        claims.append(
            Claim("cluster-c1-equals-chromatic", "clustering 1 is proper colouring", "0 violations",
                  {"graphs": len(graphs), "violations": bad}, _status(bad == 0))
        )
    except BudgetExceeded:
        claims.append(Claim("oracle-consistency", "oracle agreement", "0 violations", None, INDETERMINATE))
    try:
        instances = ep_instances(cfg.seed, cfg.budgets)
        bad = 0
        sizes = []
        for g, _name, h, p, w in instances:
            x = erdos_posa_hitting_set(g, h, p, w, check_preconditions=True, budgets=cfg.budgets)
            rest, _ = g.remove_vertices(x)
            sizes.append(len(x))
            if len(x) > p * w * len(connected_components(h)) or has_minor(rest, h, cfg.budgets) is not None:
                bad += 1
        claims.append(
            Claim("erdos-posa-hitting-set", "hitting set size and correctness", "0 violations",
                  {"instances": len(instances), "violations": bad, "max_size": max(sizes, default=0)}, _status(bad == 0))
        )
    except BudgetExceeded:
        claims.append(Claim("erdos-posa-hitting-set", "hitting set size and correctness", "0 violations", None, INDETERMINATE))
    return claims


SUITES: dict[str, Callable[[SuiteConfig], list[Claim]]] = {
    "thresholds": suite_thresholds,
    "ternary": suite_ternary,
    "rainbow": suite_rainbow,
    "weakstrong": suite_weakstrong,
    "heart": suite_heart,
    "twocolour": suite_twocolour,
    "appendix": suite_appendix,
    "oracles": suite_oracles,
}


def run_suite(name: str, config: SuiteConfig | None = None) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    config = config or SuiteConfig()
    start = time.perf_counter()
    claims = sorted(SUITES[name](config), key=lambda c: c.id)
    return SuiteReport(name, config.as_dict(), claims, timings={"seconds": round(time.perf_counter() - start, 3)})
