"""One test per acceptance criterion, at the stated tolerance and time limit.

The conftest prints an ``ACCEPTANCE <n> PASS|FAIL`` line per criterion.
"""

import time

import pytest

from clustercol.colouring import (
    Colouring,
    chromatic_number,
    cluster_colourings,
    defect_oracle,
    erdos_posa_hitting_set,
    heart_colouring,
    optimal_cluster_colouring,
    two_colour,
    verify_clustering,
)
from clustercol.config import DEFAULT_BUDGETS
from clustercol.generators import (
    closure_tree,
    complete_bipartite,
    fan,
    fat_path,
    fat_star,
    maximal_cliques,
    path,
    star,
    ternary_lower_bound,
    weak_closure_tree,
    x_family,
)
from clustercol.graph import connected_components
from clustercol.harness.suites import (
    HEART_GRAPHS,
    HEART_PARAMS,
    RAINBOW_PAIRS,
    SUITES,
    SuiteConfig,
    TERNARY_PAIRS,
    TWO_COLOUR_K,
    WEAKSTRONG_PAIRS,
    ep_instances,
    heart_inputs,
    oracle_graphs,
    pattern_free_certificate,
    run_suite,
    small_members,
    twocolour_families,
)
from clustercol.minors import has_minor, has_subgraph, high_degree_threshold, rainbow_clique, validate_model

B = DEFAULT_BUDGETS
SEED = 0


def _report(label, rows):
    for row in rows:
        print(f"  {label}: {row}")


def test_criterion_01_threshold_triad():
    start = time.perf_counter()
    rows, bad = [], []
    for c in (1, 2):
        for name, g in (("fan", fan(c * c + c)), ("fat_star", fat_star(max(c, 1))), ("fat_path", fat_path(2 * c - 1))):
            k, _ = optimal_cluster_colouring(g, c, B)
            rows.append((name, c, k))
            if k < 3:
                bad.append((name, c, k))
        if c >= 2:
            k, _ = optimal_cluster_colouring(fan(c * c + c - 1), c, B)
            rows.append(("fan-below", c, k))
            if k != 2:
                bad.append(("fan-below", c, k))
    elapsed = time.perf_counter() - start
    _report("threshold", rows)
    assert elapsed < 60
    assert not bad, f"below threshold: {bad}"


def test_criterion_02_ternary_lower_bound():
    start = time.perf_counter()
    for k, c in TERNARY_PAIRS:
        g = ternary_lower_bound(k, c, B)
        got, _ = optimal_cluster_colouring(g, c, B)
        print(f"  G_{k} at c={c}: n={g.n}, colours={got}")
        assert got >= 2 * k - 2
        if (k, c) == (3, 1):
            assert got == 4
        assert has_minor(g, closure_tree(k, 3), B) is None
    assert time.perf_counter() - start < 120


def test_criterion_03_weak_closure_contains_closure():
    start = time.perf_counter()
    for h, k in WEAKSTRONG_PAIRS:
        host = weak_closure_tree(h, k)
        model = has_minor(host, closure_tree(h, k - 1), B)
        assert model is not None, (h, k)
        validate_model(host, model)
    assert time.perf_counter() - start < 300


def test_criterion_04_heart_bound():
    for h, k, w in HEART_PARAMS:
        graphs = heart_inputs(h, k, w, SEED, HEART_GRAPHS, B)
        assert len(graphs) >= HEART_GRAPHS, (h, k, w)
        worst = (0, 0)
        for g in graphs:
            # preconditions are re-certified inside heart_colouring
            col = heart_colouring(g, h, k, w, check_preconditions=True, budgets=B)
            rep = verify_clustering(g, col)
            assert rep.num_colours <= 2**h - 2
            assert rep.max_component <= k * w
            worst = max(worst, (rep.num_colours, rep.max_component))
        print(f"  heart (h,k,w)=({h},{k},{w}): {len(graphs)} graphs, worst (colours, clustering) = {worst}")


def test_criterion_05_two_colour_families():
    k = TWO_COLOUR_K
    d = high_degree_threshold(k)
    for name, graphs in sorted(twocolour_families(SEED).items()):
        worst = 0
        for g in graphs:
            assert pattern_free_certificate(g, k, B) is not None
            col = two_colour(g, k, budgets=B)
            assert isinstance(col, Colouring)
            rep = verify_clustering(g, col)
            assert rep.num_colours <= 2
            if all(g.degree(v) < d for v in range(g.n)):
                assert rep.max_component <= d**k
            worst = max(worst, rep.max_component)
        print(f"  two_colour {name}: {len(graphs)} graphs, worst clustering {worst}")


def test_criterion_06_extremal_family_rainbow():
    start = time.perf_counter()
    for k, c in RAINBOW_PAIRS:
        members = small_members(k, c, B)
        assert members
        for g in members:
            got, _ = optimal_cluster_colouring(g, c, B)
            assert got >= k + 1
            if c == 1:
                count = 0
                for col in cluster_colourings(g, g.n, 1, B):
                    count += 1
                    assert rainbow_clique(g, col.colour, k + 1) is not None
                assert count > 0
        print(f"  X_{{{k},{c}}}: {len(members)} members with <= 11 vertices")
    assert time.perf_counter() - start < 300


def test_criterion_07_family_structure():
    for k in (1, 2, 3):
        for c in (1, 2):
            for g in small_members(k, c, B):
                assert min(len(q) for q in maximal_cliques(g)) >= k + 1
    for c in (1, 2, 3):
        for g in x_family(2, c, 10_000, B):
            assert has_subgraph(g, complete_bipartite(1, c), B) is not None
    for c in (1, 2, 3, 4):
        assert has_minor(path(c + 1), star(3), B) is None


def test_criterion_08_oracle_consistency():
    graphs = oracle_graphs(SEED)
    assert len(graphs) == 100 and max(g.n for g in graphs) <= 9
    for g in graphs:
        for c in (1, 2, 3):
            assert defect_oracle(g, c - 1, B) <= optimal_cluster_colouring(g, c, B)[0]
        assert optimal_cluster_colouring(g, 1, B)[0] == chromatic_number(g)


def test_criterion_09_erdos_posa():
    instances = ep_instances(SEED, B)
    assert len(instances) == 30
    for g, name, h, p, w in instances:
        x = erdos_posa_hitting_set(g, h, p, w, check_preconditions=True, budgets=B)
        assert len(x) <= p * w * len(connected_components(h)), (name, p, w, x)
        rest, _ = g.remove_vertices(x)
        assert has_minor(rest, h, B) is None


@pytest.mark.slow
def test_criterion_10_determinism():
    for name in sorted(SUITES):
        a = run_suite(name, SuiteConfig(seed=SEED))
        b = run_suite(name, SuiteConfig(seed=SEED))
        assert a.claims_json() == b.claims_json(), name
        print(f"  {name}: {len(a.claims)} claims, status {a.status}")
