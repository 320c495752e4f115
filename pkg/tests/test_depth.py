import math

import pytest
from hypothesis import given, settings

from clustercol.config import BudgetExceeded, Budgets
from clustercol.depth import connected_tree_depth, tree_depth, treewidth_exact
from clustercol.generators import closure_tree, complete, cycle, path, random_tree
from clustercol.graph import build_graph, disjoint_union, is_connected
from strategies import graphs


def _td_brute(g):
    """Tree-depth by its recursive definition, on vertex sets (independent oracle)."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def td(vs: frozenset) -> int:
        if not vs:
            return 0
        comps, seen = [], set()
        for s in vs:
            if s in seen:
                continue
            comp, stack = {s}, [s]
            while stack:
                u = stack.pop()
                for w in g.adj[u]:
                    if w in vs and w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        if len(comps) > 1:
            return max(td(c) for c in comps)
        return 1 + min(td(vs - {v}) for v in vs)

    return td(frozenset(range(g.n)))


def test_examples():
    assert (tree_depth(complete(4)), connected_tree_depth(complete(4))) == (4, 4)
    c33 = closure_tree(3, 3)
    assert (tree_depth(c33), connected_tree_depth(c33)) == (3, 3)
    two_triangles = disjoint_union(complete(3), complete(3))
    assert (tree_depth(two_triangles), connected_tree_depth(two_triangles)) == (3, 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_graph(n):
    assert tree_depth(complete(n)) == n


@pytest.mark.parametrize("n", range(1, 16))
def test_path_closed_form(n):
    assert tree_depth(path(n)) == math.ceil(math.log2(n + 1))


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_tree_depth_matches_definition(g):
    assert tree_depth(g) == _td_brute(g)


@settings(max_examples=60)
@given(graphs(max_n=8, connected=True))
def test_connected_equals_plain_on_connected(g):
    assert is_connected(g)
    assert connected_tree_depth(g) == tree_depth(g)


def test_treewidth_examples():
    for seed in range(5):
        assert treewidth_exact(random_tree(10, 3, seed)) == 1
    assert treewidth_exact(complete(5)) == 4
    assert treewidth_exact(cycle(6)) == 2


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=8))
def test_treewidth_against_networkx_upper_bound(g):
    from networkx.algorithms.approximation import treewidth_min_degree

    tw = treewidth_exact(g)
    upper, _ = treewidth_min_degree(g.to_networkx())
    assert tw <= upper
    assert tw <= tree_depth(g) - 1


def test_budget_limits():
    with pytest.raises(BudgetExceeded):
        treewidth_exact(path(20), Budgets(treewidth_vertices=10))
    with pytest.raises(BudgetExceeded):
        tree_depth(build_graph(25, []), Budgets(tree_depth_vertices=20))
