import random

import networkx as nx
import pytest

from schurgrr.graphs import (
    Graph,
    InvalidConnectingSet,
    build_cayley,
    from_edge_list,
    from_graph6,
    read_graph,
    to_dot,
    to_edge_list,
    to_graph6,
    validate_connecting_set,
)
from schurgrr.groups import make_cyclic, make_dihedral


def idx(G, *labels):
    return [G.index(s) for s in labels]


def random_graph(rng, V, p=0.5):
    return Graph.from_edges(V, [(u, v) for u in range(V) for v in range(u) if rng.random() < p])


def test_graph_rejects_loops():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_graph_symmetric_and_sorted():
    g = Graph.from_edges(4, [(2, 0), (0, 1), (0, 1), (3, 0)])
    assert g.adj == ((1, 2, 3), (0,), (0,), (0,))
    assert g.edges() == [(0, 1), (0, 2), (0, 3)]


# connecting sets

def test_valid_connecting_set_d11():
    D = make_dihedral(11)
    ok, problems = validate_connecting_set(D, idx(D, "a", "ab", "ab^4"))
    assert ok and problems == []


def test_connecting_set_with_identity():
    D = make_dihedral(5)
    ok, problems = validate_connecting_set(D, [0] + idx(D, "a", "ab"))
    assert not ok
    assert "identity" in problems[0]


def test_connecting_set_rotations_only():
    n = 7
    D = make_dihedral(n)
    ok, problems = validate_connecting_set(D, idx(D, "b", f"b^{n - 1}"))
    assert not ok
    assert any("order 7" in p for p in problems)


def test_connecting_set_not_inverse_closed():
    Z = make_cyclic(5)
    ok, problems = validate_connecting_set(Z, [1])
    assert not ok
    assert any("inverse" in p for p in problems)


# Cayley graphs

def test_cayley_complete():
    D = make_dihedral(3)
    g = build_cayley(D, range(1, 6))
    assert len(g.edges()) == 15


def test_cayley_cycle():
    g = build_cayley(make_cyclic(5), [1, 4])
    assert g.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_cayley_d11_cubic_bipartite():
    D = make_dihedral(11)
    g = build_cayley(D, idx(D, "a", "ab", "ab^4"))
    assert all(g.degree(v) == 3 for v in range(22))
    # every generator is a reflection, so each edge joins a rotation and a reflection
    assert all((u < 11) != (v < 11) for u, v in g.edges())


def test_cayley_invalid():
    with pytest.raises(InvalidConnectingSet):
        build_cayley(make_cyclic(6), [2, 4])


# graph6 against networkx as reference encoder

@pytest.mark.parametrize("V", [0, 1, 2, 5, 8, 13, 62, 63, 70])
def test_graph6_matches_networkx(V):
    rng = random.Random(V)
    g = random_graph(rng, V, 0.3)
    ref = nx.Graph()
    ref.add_nodes_from(range(V))
    ref.add_edges_from(g.edges())
    expected = nx.to_graph6_bytes(ref, header=False).decode().strip()
    assert to_graph6(g) == expected
    assert from_graph6(expected) == g
    assert to_graph6(g, header=True) == ">>graph6<<" + expected


def test_graph6_known_strings():
    # K4 and the 5-cycle, from the format description
    K4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i)])
    assert to_graph6(K4) == "C~"
    C5 = build_cayley(make_cyclic(5), [1, 4])
    assert to_graph6(C5) == "Dhc"


def test_graph6_large_n_header():
    g = Graph.from_edges(300, [(0, 299)])
    s = to_graph6(g)
    assert s[0] == "~"
    assert from_graph6(s) == g


def test_graph6_rejects_bad_length():
    with pytest.raises(ValueError):
        from_graph6("C~~")


def test_edge_list_roundtrip():
    D = make_dihedral(5)
    g = build_cayley(D, idx(D, "a", "ab"))
    text = to_edge_list(g)
    assert text.splitlines()[0] == "10 10"
    assert from_edge_list(text) == g
    assert read_graph(text) == g
    assert read_graph(to_graph6(g) + "\n") == g


def test_edge_list_count_mismatch():
    with pytest.raises(ValueError):
        from_edge_list("3 2\n0 1\n")


def test_dot_export():
    D = make_dihedral(3)
    dot = to_dot(build_cayley(D, idx(D, "a", "ab")), D.labels)
    assert dot.startswith("graph G {")
    assert dot.count(" -- ") == 6
