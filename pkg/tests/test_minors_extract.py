import networkx as nx
import pytest

from clustercol.config import InputError
from clustercol.generators import (
    complete,
    complete_bipartite,
    fan,
    fat_path,
    fat_star,
    path,
    star,
    cycle,
)
from clustercol.graph import bfs_layering, build_graph, disjoint_union
from clustercol.minors import (
    StrongModel,
    copies,
    disjoint_model_to_minor,
    fan_from_layered_path,
    fat_minor_from_strong_model,
    fat_star_from_high_pairs,
    find_forest,
    high_degree_threshold,
    make_connected_model,
    many_high,
    one_high,
    rainbow_clique,
    two_connected_high,
    validate_model,
    validate_strong_model,
)


def iso(a, b):
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_threshold_values():
    assert high_degree_threshold(1) == 57
    assert high_degree_threshold(2) == 4 * 4 * (18 * 2**5 + 1)


def test_one_high_complete_bipartite():
    k, l = 2, 3
    g = complete_bipartite(2, 2 * l * k)
    res = one_high(g, 0, k, l)
    assert res.fan is None
    assert res.x == {1} and len(res.s) == l
    assert all(g.has_edge(0, w) and g.has_edge(1, w) for w in res.s)


def test_one_high_fan():
    k, l = 2, 2
    g = fan(2 * l * k)
    res = one_high(g, g.n - 1, k, l)
    assert res.fan is not None
    validate_model(g, res.fan)
    assert iso(res.fan.pattern, fan(k))


def test_one_high_degree_precondition():
    with pytest.raises(InputError):
        one_high(complete_bipartite(2, 5), 0, 2, 3)


def _grid(n):
    edges = []
    for r in range(n):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < n:
                edges.append((v, v + n))
    return edges


def test_many_high_grid():
    edges = _grid(5) + [(25, u) for u in range(8)] + [(26, u) for u in range(17, 25)]
    g = build_graph(27, edges)
    model = many_high(g, [25, 26], 2)
    validate_model(g, model)
    assert iso(model.pattern, fan(2)) or iso(model.pattern, fat_star(2))


def test_many_high_k1():
    g = build_graph(5, [(0, 1), (0, 2), (0, 3), (4, 1)])
    model = many_high(g, [4], 1)
    validate_model(g, model)
    assert iso(model.pattern, fan(1)) or iso(model.pattern, fat_star(1))


def test_many_high_disconnected_rest():
    g = build_graph(5, [(0, 1), (2, 3), (4, 0), (4, 2)])
    with pytest.raises(InputError):
        many_high(g, [4], 1)


def test_find_forest_single_edge():
    k = 3
    b = build_graph(2 + k, [(a, w) for a in (0, 1) for w in range(2, 2 + k)])
    sm = find_forest(b, [0, 1], k, 0)
    assert sm.pattern.edges() == [(0, 1)] and sm.witness(0, 1) == set(range(2, 2 + k))


def test_find_forest_four_vertices():
    k = 2
    b = complete_bipartite(4, k)
    sm = find_forest(b, range(4), k, 0)
    assert sm.pattern.m >= 2
    validate_strong_model(b, sm, k)


def test_find_forest_empty_pattern():
    b = build_graph(4, [(0, 2), (1, 2), (0, 3), (1, 3)])
    sm = find_forest(b, [0, 1], 3, 0)
    assert sm.pattern.m == 0


def test_find_forest_rejects_non_bipartition():
    with pytest.raises(InputError):
        find_forest(complete(3), [0], 1, 0)


def _two_pairs_host():
    edges = [(0, w) for w in (2, 3, 4)] + [(1, w) for w in (2, 3, 4)]
    edges += [(5, w) for w in (7, 8, 9)] + [(6, w) for w in (7, 8, 9)]
    edges += [(0, 10), (10, 11), (11, 5)]
    return build_graph(12, edges)


def test_make_connected_model_two_pairs():
    g = _two_pairs_host()
    sm = StrongModel.of(copies(complete(2), 2), [[0], [1], [5], [6]], {(0, 1): [2, 3, 4], (2, 3): [7, 8, 9]})
    validate_strong_model(g, sm, 3)
    out = make_connected_model(g, sm, 1)
    assert nx.is_connected(out.pattern.to_networkx())
    assert out.pattern.m == 2 and out.pattern.n == 3
    validate_strong_model(g, out, 1)


def test_make_connected_model_connected_unchanged():
    g = complete_bipartite(2, 4)
    sm = StrongModel.of(complete(2), [[0], [1]], {(0, 1): [2, 3, 4, 5]})
    assert make_connected_model(g, sm, 4) == sm


def test_make_connected_model_drops_isolated():
    g = complete_bipartite(2, 4)
    pattern = disjoint_union(complete(2), complete(1))
    sm = StrongModel.of(pattern, [[0], [1], [2]], {(0, 1): [3, 4, 5]})
    out = make_connected_model(g, sm, 3)
    assert out.pattern.n == 2 and out.pattern.m == 1


def test_fat_path_from_strong_edge():
    g = complete_bipartite(2, 6)
    sm = StrongModel.of(complete(2), [[0], [1]], {(0, 1): range(2, 8)})
    model = fat_minor_from_strong_model(g, sm, 2)
    validate_model(g, model)
    assert iso(model.pattern, fat_path(2))


def test_fat_star_from_strong_star():
    edges = [(0, w) for w in range(3, 15)] + [(1, w) for w in range(3, 9)] + [(2, w) for w in range(9, 15)]
    g = build_graph(15, edges)
    sm = StrongModel.of(path(3), [[1], [0], [2]], {(0, 1): range(3, 9), (1, 2): range(9, 15)})
    validate_strong_model(g, sm, 6)
    model = fat_minor_from_strong_model(g, sm, 2)
    validate_model(g, model)
    assert iso(model.pattern, fat_star(2))


def test_fat_minor_k1():
    g = complete_bipartite(2, 2)
    sm = StrongModel.of(complete(2), [[0], [1]], {(0, 1): [2, 3]})
    model = fat_minor_from_strong_model(g, sm, 1)
    validate_model(g, model)
    assert iso(model.pattern, fat_star(1)) or iso(model.pattern, fat_path(1))


def test_fat_minor_needs_enough_witnesses():
    g = complete_bipartite(2, 5)
    sm = StrongModel.of(complete(2), [[0], [1]], {(0, 1): range(2, 7)})
    with pytest.raises(InputError):
        fat_minor_from_strong_model(g, sm, 2)


def test_disjoint_model_to_minor_k1():
    g = complete_bipartite(2, 3)
    sm = StrongModel.of(complete(2), [[0], [1]], {(0, 1): [2, 3, 4]})
    model = disjoint_model_to_minor(g, sm, 1)
    validate_model(g, model)


def test_fan_from_layered_path_base_case():
    g = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
    lay = bfs_layering(g, 0)
    model = fan_from_layered_path(g, lay, [1, 2, 3, 4], 1, 0, 3)
    validate_model(g, model)
    assert iso(model.pattern, fan(3))


def test_fan_from_layered_path_weaving():
    g = build_graph(5, [(0, 1), (0, 3), (1, 2), (2, 3), (3, 4)])
    lay = bfs_layering(g, 0)
    assert [lay.layer[v] for v in (1, 2, 3, 4)] == [1, 2, 1, 2]
    model = fan_from_layered_path(g, lay, [1, 2, 3, 4], 1, 1, 2)
    validate_model(g, model)
    assert iso(model.pattern, fan(2))


def test_fan_from_layered_path_recurses():
    g = build_graph(5, [(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)])
    lay = bfs_layering(g, 0)
    model = fan_from_layered_path(g, lay, [1, 2, 3, 4], 1, 1, 2)
    validate_model(g, model)
    assert iso(model.pattern, fan(2))


def test_fan_from_layered_path_too_short():
    g = fan(3)
    lay = bfs_layering(g, 3)
    with pytest.raises(InputError):
        fan_from_layered_path(g, lay, [0, 1], 1, 1, 2)


def test_fat_star_from_high_pairs():
    k = 2
    mids = 2 * k * (k + 1)
    edges, nxt, blocks = [], 1, []
    for _ in range(k):
        u = nxt
        block = [0, u]
        for w in range(nxt + 1, nxt + 1 + mids):
            edges += [(0, w), (u, w)]
            block.append(w)
        nxt += 1 + mids
        blocks.append(block)
    g = build_graph(nxt, edges)
    model = fat_star_from_high_pairs(g, 0, blocks, k)
    validate_model(g, model)
    assert iso(model.pattern, fat_star(k))


def test_two_connected_high_k1():
    g = complete_bipartite(3, 60)
    model = two_connected_high(g, 1)
    assert model is not None
    validate_model(g, model)
    assert any(iso(model.pattern, p) for p in (fan(1), fat_star(1), fat_path(1)))


def test_two_connected_high_small_graph():
    assert two_connected_high(cycle(10), 1) is None


def test_two_connected_high_needs_2_connected():
    with pytest.raises(InputError):
        two_connected_high(path(4), 1)


def test_rainbow_clique_examples():
    assert rainbow_clique(complete(3), [0, 1, 2], 3) == (0, 1, 2)
    assert rainbow_clique(complete(3), [0, 0, 1], 3) is None
    assert rainbow_clique(complete(4), [3, 1, 0, 2], 4) == (0, 1, 2, 3)
    assert rainbow_clique(star(3), [0, 1, 1, 1], 2) == (0, 1)
    assert rainbow_clique(star(3), [0, 0, 0, 0], 2) is None
