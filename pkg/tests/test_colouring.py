from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustercol.colouring import (
    Colouring,
    Witness,
    clustering,
    erdos_posa_hitting_set,
    heart_colouring,
    parity_colouring,
    two_colour,
    two_colour_2connected,
    two_colour_bound_holds,
    verify_clustering,
    verify_defect,
    weak_closure_colouring,
)
from clustercol.colouring.algorithms import weak_closure_colours
from clustercol.config import InputError
from clustercol.depth import treewidth_exact
from clustercol.generators import (
    bowtie,
    closure_tree,
    complete,
    complete_bipartite,
    cycle,
    fan,
    path,
    random_graph,
    random_tree,
    star,
    weak_closure_tree,
)
from clustercol.graph import bfs_layering, connected_components, empty_graph
from clustercol.minors import copies, has_minor, high_degree_threshold, validate_model
from strategies import graphs


def mono_components_nx(g, colours):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v in g.edges() if colours[u] == colours[v])
    return [sorted(c) for c in nx.connected_components(h)]


# -- verifier --------------------------------------------------------------------------


def test_verify_examples():
    rep = verify_clustering(complete(4), [0, 1, 2, 3])
    assert (rep.max_component, rep.defect) == (1, 0)
    rep = verify_clustering(path(5), [0] * 5)
    assert (rep.max_component, rep.defect) == (5, 2)
    col = [0, 0, 1, 1, 0, 0, 0]  # fan(6): dominant vertex 6 coloured like the path ends
    rep = verify_clustering(fan(6), col)
    assert rep.max_component == max(len(c) for c in mono_components_nx(fan(6), col))


def test_verify_rejects_partial():
    with pytest.raises(InputError):
        verify_clustering(path(3), [0, 1])


@given(graphs(max_n=10), st.data())
def test_verify_matches_networkx(g, data):
    colours = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    rep = verify_clustering(g, colours)
    comps = mono_components_nx(g, colours)
    assert rep.max_component == max((len(c) for c in comps), default=0)
    assert sorted(c for _, c in rep.components) == sorted(tuple(c) for c in comps)
    assert rep.defect <= max(rep.max_component - 1, 0)
    assert verify_defect(g, colours, rep.defect)
    if rep.defect:
        assert not verify_defect(g, colours, rep.defect - 1)


def test_verify_defect_examples():
    assert verify_defect(cycle(4), [0, 1, 0, 1], 0)
    assert not verify_defect(path(3), [0, 0, 0], 1)
    assert verify_defect(star(5), [0] * 6, 5)
    assert not verify_defect(star(5), [0] * 6, 4)


def test_colouring_normalized():
    col = Colouring.of([5, 2, 5, 7], note="x")
    assert col.normalized().colour == (0, 1, 0, 2)
    assert col.num_colours == 3 and len(col) == 4


# -- parity and the two-colouring ------------------------------------------------------


def test_parity_examples():
    assert clustering(path(4), parity_colouring(path(4), 0)) == 1
    col = parity_colouring(cycle(6), 0)
    assert col.colour == (0, 1, 0, 1, 0, 1) and clustering(cycle(6), col) == 1
    assert parity_colouring(cycle(5), 0).colour == (0, 1, 0, 0, 1)
    assert clustering(complete(4), parity_colouring(complete(4), 2)) == 3


@given(graphs(max_n=10, connected=True))
def test_parity_components_stay_in_one_layer(g):
    col = parity_colouring(g, 0)
    lay = bfs_layering(g, 0)
    for _, comp in verify_clustering(g, col).components:
        assert len({lay.layer[v] for v in comp}) == 1


def test_two_colour_2connected_examples():
    col = two_colour_2connected(cycle(12), 3, 0)
    assert col.info["branch"] == "parity" and clustering(cycle(12), col) <= 2
    g = complete_bipartite(2, 9)
    col = two_colour_2connected(g, 3, 0)
    assert col.num_colours <= 2 and clustering(g, col) <= 9
    col = two_colour_2connected(complete(3), 2, 0)
    rep = verify_clustering(complete(3), col)
    assert (rep.num_colours, rep.max_component) == (2, 2)


def test_two_colour_2connected_layered_branch():
    g = complete_bipartite(2, 9)
    col = two_colour_2connected(g, 3, 2, degree_threshold=5)
    assert col.info["branch"] == "layered" and col.info["high"] == 2
    rep = verify_clustering(g, col)
    assert rep.num_colours <= 2
    # the high-degree vertices are black, their neighbours in marked layers white
    assert col.colour[0] == col.colour[1] == 1


def test_two_colour_2connected_rejects_cut_vertex():
    with pytest.raises(InputError):
        two_colour_2connected(path(3), 2, 0)


def test_two_colour_examples():
    for g, k in [(bowtie(), 2), (cycle(9), 3), (random_tree(15, 4, 1), 3)]:
        col = two_colour(g, k)
        rep = verify_clustering(g, col)
        assert rep.num_colours <= 2
        assert two_colour_bound_holds(rep.max_component, k)
    assert clustering(cycle(9), two_colour(cycle(9), 3)) <= 3


def test_two_colour_bound_arithmetic():
    assert two_colour_bound_holds(10**100, 2)
    assert high_degree_threshold(1) == 57
    # at k = 1 the bound is d^(1) = 57
    assert two_colour_bound_holds(57, 1) and not two_colour_bound_holds(58, 1)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12), st.integers(2, 4))
def test_two_colour_always_two_colours(g, k):
    col = two_colour(g, k)
    assert isinstance(col, Colouring)
    assert verify_clustering(g, col).num_colours <= 2


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=10, connected=True), st.integers(3, 5))
def test_two_colour_layered_override(g, threshold):
    """With a small degree threshold the layered branch runs on every block."""
    from clustercol.graph import block_decomposition

    bf = block_decomposition(g, 0)
    highs = {}
    for bi, blk in enumerate(bf.blocks):
        bset = set(blk)
        for v in blk:
            if sum(1 for w in g.adj[v] if w in bset) >= threshold:
                highs.setdefault(v, []).append(bi)
    k = 3
    if any(len(b) >= k for b in highs.values()):
        return
    col = two_colour(g, k, degree_threshold=threshold)
    assert verify_clustering(g, col).num_colours <= 2


# -- hitting sets ----------------------------------------------------------------------


def brute_hitting(g, h):
    for size in range(g.n + 1):
        for xs in combinations(range(g.n), size):
            rest, _ = g.remove_vertices(xs)
            if has_minor(rest, h) is None:
                return size
    raise AssertionError


def test_erdos_posa_examples():
    x = erdos_posa_hitting_set(complete(3), complete(3), 2, 2)
    assert len(x) == 1
    x = erdos_posa_hitting_set(path(5), complete(2), 3, 1)
    assert len(x) == 2
    rest, _ = path(5).remove_vertices(x)
    assert rest.m == 0
    assert erdos_posa_hitting_set(path(4), complete(3), 1, 1) == []


def test_erdos_posa_preconditions():
    with pytest.raises(InputError):
        erdos_posa_hitting_set(complete(4), complete(3), 2, 2)  # treewidth 3 > 2
    with pytest.raises(InputError):
        erdos_posa_hitting_set(path(4), complete(2), 2, 1)  # holds 2 disjoint edges


@pytest.mark.parametrize("seed", range(12))
def test_erdos_posa_is_minimum(seed):
    g = random_graph(7, 0.35, seed)
    h = [complete(2), complete(3), path(3), cycle(4)][seed % 4]
    w = max(1, treewidth_exact(g))
    p = 1
    while has_minor(g, copies(h, p)) is not None:
        p += 1
    x = erdos_posa_hitting_set(g, h, p, w)
    rest, _ = g.remove_vertices(x)
    assert has_minor(rest, h) is None
    assert len(x) == brute_hitting(g, h)
    assert len(x) <= p * w * len(connected_components(h))


# -- heart colouring -------------------------------------------------------------------


def test_heart_examples():
    assert heart_colouring(empty_graph(0), 1, 2, 1).num_colours == 0
    col = heart_colouring(path(10), 2, 3, 1)
    rep = verify_clustering(path(10), col)
    assert rep.num_colours <= 2 and rep.max_component <= 3
    col = heart_colouring(cycle(8), 3, 2, 2)
    rep = verify_clustering(cycle(8), col)
    assert rep.num_colours <= 6 and rep.max_component <= 4


def test_heart_preconditions():
    with pytest.raises(InputError):
        heart_colouring(complete(4), 3, 2, 2)  # treewidth 3
    with pytest.raises(InputError):
        heart_colouring(star(3), 2, 3, 1)  # contains K_{1,3}


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 14), st.integers(2, 4), st.integers(0, 2**20), st.sampled_from([(2, 3), (3, 2), (3, 3)]))
def test_heart_bound_on_trees(n, max_deg, seed, hk):
    h, k = hk
    g = random_tree(n, max_deg, seed)
    if has_minor(g, closure_tree(h, k)) is not None:
        return
    col = heart_colouring(g, h, k, 1, check_preconditions=False)
    rep = verify_clustering(g, col)
    assert rep.num_colours <= 2**h - 2 and rep.max_component <= k


# -- weak closures ---------------------------------------------------------------------


def test_weak_closure_colour_counts():
    assert [weak_closure_colours(h) for h in (1, 2, 3, 4)] == [0, 2, 10, 42]


def test_weak_closure_depth_one():
    assert weak_closure_colouring(empty_graph(0), 1, 3).num_colours == 0
    got = weak_closure_colouring(path(2), 1, 3)
    assert isinstance(got, Witness) and got.model.pattern.n == 1


def test_weak_closure_witness_on_path():
    got = weak_closure_colouring(path(6), 2, 1)
    assert isinstance(got, Witness)
    validate_model(path(6), got.model)


@pytest.mark.parametrize("g,h,k", [(cycle(8), 3, 1), (path(7), 2, 3), (star(4), 2, 5), (cycle(6), 2, 3), (bowtie(), 3, 2)])
def test_weak_closure_outcomes(g, h, k):
    got = weak_closure_colouring(g, h, k)
    if isinstance(got, Witness):
        validate_model(g, got.model)
        assert got.model.pattern == weak_closure_tree(h, k)
    else:
        assert verify_clustering(g, got).num_colours <= weak_closure_colours(h)
