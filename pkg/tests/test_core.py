import pytest

from girthlab import (
    GraphBuilder,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    degree_sequence,
    dodecahedron_graph,
    graph_from_rows,
    heawood_graph,
    is_connected,
    named_graph,
    path_graph,
    petersen_graph,
    regularity,
)
from girthlab.core import max_vertices


def test_builder_rejects_loops_and_bad_vertices():
    b = GraphBuilder(4)
    with pytest.raises(ValueError):
        b.add_edge(1, 1)
    with pytest.raises(ValueError):
        b.add_edge(0, 4)
    with pytest.raises(ValueError):
        GraphBuilder(1000)


def test_graph_invariants():
    g = complete_graph(5)
    assert g.m == 10
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
    for i, j in g.edges():
        assert g.has_edge(i, j) and g.has_edge(j, i)
    with pytest.raises(ValueError):
        graph_from_rows([0b010, 0b100, 0b000])  # asymmetric


def test_named_graph_orders_and_degrees():
    cases = [
        (petersen_graph(), 10, 15, 3),
        (dodecahedron_graph(), 20, 30, 3),
        (heawood_graph(), 14, 21, 3),
        (complete_graph(4), 4, 6, 3),
        (complete_bipartite_graph(3, 3), 6, 9, 3),
        (cycle_graph(5), 5, 5, 2),
    ]
    for g, n, m, k in cases:
        assert (g.n, g.m) == (n, m)
        is_reg, deg = regularity(g)
        assert is_reg and deg == k
        assert is_connected(g)


def test_path_degrees_not_regular():
    g = path_graph(4)
    assert degree_sequence(g) == (1, 1, 2, 2)
    assert regularity(g) == (False, None)


def test_named_graph_parser():
    assert named_graph("petersen") == petersen_graph()
    assert named_graph("cycle(5)") == cycle_graph(5)
    assert named_graph("complete_bipartite(3,3)") == complete_bipartite_graph(3, 3)
    with pytest.raises(ValueError):
        named_graph("cycle(2)")
    with pytest.raises(ValueError):
        named_graph("mystery")


def test_empty_graph_is_connected():
    from girthlab import Graph

    assert is_connected(Graph(0, ()))
    assert regularity(Graph(0, ())) == (True, None)


def _distance_profile(g, v):
    from girthlab import bits

    dist = {v: 0}
    frontier = [v]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for y in bits(g.rows[x]):
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(dist.values()))


def test_petersen_weak_vertex_transitivity():
    g = petersen_graph()
    profiles = {_distance_profile(g, v) for v in range(g.n)}
    assert len(profiles) == 1


def test_dodecahedron_distance_profile():
    g = dodecahedron_graph()
    profiles = {_distance_profile(g, v) for v in range(g.n)}
    assert len(profiles) == 1
    counts = [0] * 6
    for d in profiles.pop():
        counts[d] += 1
    assert counts == [1, 3, 6, 6, 3, 1]


def test_max_vertices_env_override(monkeypatch):
    monkeypatch.setenv("GIRTHLAB_MAX_N", "128")
    assert max_vertices() == 128
    monkeypatch.setenv("GIRTHLAB_MAX_N", "0")
    with pytest.raises(ValueError):
        max_vertices()
    monkeypatch.setenv("GIRTHLAB_MAX_N", "zap")
    with pytest.raises(ValueError):
        max_vertices()
    monkeypatch.delenv("GIRTHLAB_MAX_N")
    assert max_vertices() == 64
