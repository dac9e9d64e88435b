import random

import pytest

from vstab import (
    Coloring,
    Graph,
    blow_up_cycle5,
    complete_graph,
    delete_vertices,
    disjoint_union,
    is_clique,
    is_clique_partition,
    is_independent,
    is_proper,
    join,
    max_degree,
    parse_dimacs_graph,
    read_dimacs_graph,
    vset,
    vset_list,
    write_dimacs_graph,
    write_dot,
)
from conftest import random_graph


def test_vset_roundtrip():
    assert vset([]) == 0
    assert vset([0, 3, 5]) == 0b101001
    assert vset_list(0b101001) == [0, 3, 5]
    assert vset_list(vset(range(7))) == list(range(7))


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, [0b10])  # length mismatch
    with pytest.raises(ValueError):
        Graph(1, [0b1])  # self-loop
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0b000])  # bit out of range
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_basic_accessors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.m == 3
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(0, 3)
    assert g.degree(1) == 2
    assert g.neighbors(2) == [1, 3]
    assert max_degree(g) == 2
    assert max_degree(Graph(0, [])) == 0


def test_graph_equality_and_hash():
    g1 = Graph.from_edges(3, [(0, 1)])
    g2 = Graph.from_edges(3, [(0, 1)])
    g3 = Graph.from_edges(3, [(0, 2)])
    assert g1 == g2 and hash(g1) == hash(g2)
    assert g1 != g3


def test_complete_graph():
    k5 = complete_graph(5)
    assert k5.n == 5 and k5.m == 10
    assert is_clique(k5, k5.full_mask())
    assert max_degree(k5) == 4


def test_clique_independent_predicates():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert is_clique(g, vset([0, 1, 2]))
    assert not is_clique(g, vset([0, 1, 3]))
    assert is_clique(g, vset([2]))
    assert is_clique(g, 0)
    assert is_independent(g, vset([0, 3]))
    assert not is_independent(g, vset([0, 1]))
    assert is_independent(g, 0)
    with pytest.raises(ValueError):
        is_clique(g, 1 << 6)
    with pytest.raises(ValueError):
        is_independent(g, 1 << 6)


def test_clique_partition_predicate():
    g = blow_up_cycle5(2)
    parts = [((1 << 2) - 1) << (2 * i) for i in range(5)]
    assert is_clique_partition(g, parts)
    assert not is_clique_partition(g, parts[:4])  # does not cover
    assert not is_clique_partition(g, parts + [parts[0]])  # overlaps


def test_is_proper():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert is_proper(g, Coloring((1, 2, 1), 2))
    assert not is_proper(g, Coloring((1, 1, 2), 2))
    assert not is_proper(g, Coloring((1, 2), 2))  # wrong length
    assert not is_proper(g, Coloring((1, 3, 1), 2))  # color out of range
    assert Coloring((1, 2, 1), 2).used() == 2


def test_join():
    g = join(complete_graph(2), complete_graph(3))
    assert g == complete_graph(5)
    h = join(Graph(2, [0, 0]), Graph(1, [0]))
    assert h.m == 2 and not h.has_edge(0, 1)


def test_disjoint_union():
    g, offsets = disjoint_union([complete_graph(3), complete_graph(2)])
    assert offsets == [0, 3]
    assert g.n == 5 and g.m == 4
    assert g.has_edge(3, 4) and not g.has_edge(2, 3)


def test_blow_up_cycle5():
    c5 = blow_up_cycle5(1)
    assert c5.n == 5 and c5.m == 5
    assert c5.has_edge(0, 1) and c5.has_edge(0, 4) and not c5.has_edge(0, 2)
    g = blow_up_cycle5(3)
    assert g.n == 15
    # inside a part: clique; adjacent parts fully joined; opposite parts not
    assert is_clique(g, vset([0, 1, 2]))
    assert g.has_edge(0, 3) and not g.has_edge(0, 6)
    assert max_degree(g) == 3 * 3 - 1
    with pytest.raises(ValueError):
        blow_up_cycle5(0)


def test_delete_vertices():
    g = complete_graph(4)
    h, index_map = delete_vertices(g, vset([1, 3]))
    assert h == complete_graph(2)
    assert index_map == [0, -1, 1, -1]
    h2, _ = delete_vertices(g, 0)
    assert h2 == g
    with pytest.raises(ValueError):
        delete_vertices(g, 1 << 9)


def test_delete_vertices_random(tiny_corpus):
    # edges of the induced subgraph are exactly the surviving edges
    rng = random.Random(5)
    for g in tiny_corpus:
        s = vset([v for v in range(g.n) if rng.random() < 0.4])
        h, index_map = delete_vertices(g, s)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if s >> u & 1 or s >> v & 1:
                    continue
                assert h.has_edge(index_map[u], index_map[v]) == g.has_edge(u, v)


def test_dimacs_roundtrip(small_corpus):
    for g in small_corpus:
        assert read_dimacs_graph(write_dimacs_graph(g)) == g


def test_dimacs_writer_canonical():
    g = Graph.from_edges(3, [(2, 0), (1, 0)])
    assert write_dimacs_graph(g) == "p edge 3 2\ne 1 2\ne 1 3\n"
    assert write_dimacs_graph(Graph(2, [0, 0])) == "p edge 2 0\n"


def test_dimacs_parser_info():
    text = "c hello\np edge 3 2\ne 1 2\ne 2 1\ne 1 3\n"
    g, info = parse_dimacs_graph(text)
    assert g.m == 2
    assert info["duplicate_edges"] == 1
    assert info["comments"] == ["hello"]


@pytest.mark.parametrize(
    "text",
    [
        "",  # missing problem line
        "p edge 2\n",  # short problem line
        "p col 2 1\n",  # wrong format token
        "e 1 2\np edge 3 1\n",  # edge before problem line
        "p edge 3 1\ne 1\n",  # short edge line
        "p edge 3 1\ne 1 1\n",  # self-loop
        "p edge 3 1\ne 0 2\n",  # index out of range
        "p edge 3 1\ne 1 4\n",  # index out of range
        "p edge 3 1\nq 1 2\n",  # unknown line
        "p edge -1 0\n",  # negative count
    ],
)
def test_dimacs_parser_errors(text):
    with pytest.raises(ValueError):
        parse_dimacs_graph(text)


def test_write_dot():
    g = Graph.from_edges(3, [(0, 1)])
    out = write_dot(g)
    assert out.startswith("graph G {")
    assert "0 -- 1;" in out
    assert "2;" in out  # isolated vertex listed
    assert out.endswith("}\n")
