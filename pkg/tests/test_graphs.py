import pytest
from hypothesis import given, settings, strategies as st

from qmu.graphs import (
    Graph,
    GraphError,
    NotBipartiteError,
    hypercube,
    path,
    cycle,
    complete,
    cartesian_product_k2,
    induced_subgraph,
    bipartition,
    matching_decomposition,
)


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])  # loop
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])  # duplicate after normalization
    with pytest.raises(GraphError):
        Graph.from_edges(4, [(0, 1), (2, 3)])  # disconnected
    with pytest.raises(GraphError):
        Graph(2, ())  # no edges
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 5)])  # id out of range
    with pytest.raises(GraphError):
        Graph(3, ((1, 2), (0, 1)))  # direct constructor demands canonical order


def test_from_edges_canonicalizes():
    g = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.edge_index(2, 1) == 1
    assert g.adjacency[1] == ((0, 0), (2, 1))


@given(st.integers(min_value=1, max_value=8))
@settings(max_examples=20)
def test_hypercube_shape(n):
    g = hypercube(n)
    assert g.vertex_count == 2 ** n
    assert g.edge_count == n * 2 ** (n - 1)
    assert g.is_regular and g.max_degree == n
    b = bipartition(g)
    assert len(b.part_r) == len(b.part_l) == 2 ** (n - 1)


def test_hypercube_edges_are_bit_flips():
    g = hypercube(3)
    for u, v in g.edges:
        x = u ^ v
        assert x & (x - 1) == 0 and x != 0


def test_generator_ranges():
    for bad in (hypercube, lambda n: path(n), cycle, complete):
        with pytest.raises(GraphError):
            bad(0)
    with pytest.raises(GraphError):
        cycle(2)
    assert path(2).edge_count == 1
    assert complete(2).edge_count == 1


def test_q2_is_c4():
    assert hypercube(2).edge_count == 4
    assert sorted(hypercube(2).degrees) == [2, 2, 2, 2]
    # same canonical labels: C4 visits 0-1-3-2
    assert hypercube(2).edges == ((0, 1), (0, 2), (1, 3), (2, 3))


def test_product_with_single_edge():
    k2 = path(2)
    c4 = cartesian_product_k2(k2)
    assert c4 == hypercube(2)
    g = cartesian_product_k2(cycle(4))
    assert g.vertex_count == 8 and g.edge_count == 12


@pytest.mark.parametrize("n", range(1, 6))
def test_product_of_cube_is_next_cube(n):
    # the copy-0/copy-1 labeling makes this equality literal, not just isomorphism
    assert cartesian_product_k2(hypercube(n)) == hypercube(n + 1)


def test_induced_subgraph():
    g = hypercube(3)
    whole = induced_subgraph(g, range(8))
    assert len(whole.edges) == 12
    b = bipartition(g)
    assert induced_subgraph(g, b.part_r).edges == ()
    star = induced_subgraph(g, {0, 1, 2, 4})
    assert set(star.edges) == {(0, 1), (0, 2), (0, 4)}
    assert star.degrees[0] == 3
    with pytest.raises(GraphError):
        induced_subgraph(g, set())


def test_bipartition_parts():
    b = bipartition(hypercube(2))
    assert b.part_r == frozenset({0, 3})
    assert b.part_l == frozenset({1, 2})
    b3 = bipartition(hypercube(3))
    assert 0 in b3.part_r
    # popcount parity
    assert all(bin(v).count("1") % 2 == 0 for v in b3.part_r)


def test_bipartition_odd_cycle_reported():
    with pytest.raises(NotBipartiteError) as exc:
        bipartition(complete(3))
    walk = exc.value.odd_walk
    assert walk[0] == walk[-1]
    assert len(walk) % 2 == 0  # closed walk repeating its start: odd edge count
    g = complete(3)
    for a, b in zip(walk, walk[1:]):
        assert g.has_edge(a, b)


@pytest.mark.parametrize("make,delta", [
    (lambda: hypercube(1), 1),
    (lambda: hypercube(3), 3),
    (lambda: cycle(4), 2),
    (lambda: hypercube(4), 4),
])
def test_matching_decomposition(make, delta):
    g = make()
    b = bipartition(g)
    mats = matching_decomposition(g, b)
    assert len(mats) == delta
    seen = set()
    for mat in mats:
        verts = set()
        for ei in mat:
            u, v = g.edges[ei]
            assert not {u, v} & verts
            verts |= {u, v}
        assert verts == set(range(g.vertex_count))  # perfect
        assert not set(mat) & seen
        seen |= set(mat)
    assert seen == set(range(g.edge_count))


def test_matching_decomposition_rejects_bad_input():
    g = path(3)
    with pytest.raises(GraphError):
        matching_decomposition(g, bipartition(g))  # not regular
    g = hypercube(2)
    from qmu.graphs import Bipartition

    with pytest.raises(GraphError):
        matching_decomposition(g, Bipartition(frozenset({0, 1}), frozenset({2, 3})))


def test_json_roundtrip():
    g = hypercube(3)
    assert Graph.from_json(g.to_json()) == g
    obj = g.to_json_obj()
    assert obj["vertices"] == 8
    assert obj["edges"] == sorted(obj["edges"])


def test_dot_export():
    dot = cycle(3).to_dot()
    assert dot.startswith("graph G {")
    assert "0 -- 1;" in dot and dot.rstrip().endswith("}")
