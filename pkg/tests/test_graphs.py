from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hookimm.errors import GraphFormatError, SizeLimitError
from hookimm.families import complete_graph, cycle_graph, nonisomorphic_trees, path_graph
from hookimm.graphs import (
    Digraph,
    Graph,
    MatrixParams,
    all_cycles,
    build_H,
    cycles_through_edge,
    cycles_through_vertex,
    delete_arc,
    delete_edge,
    dicycles_through_arc,
    dicycles_through_vertex,
    format_edge_list,
    is_bipartite,
    parse_graph,
    parse_graph6,
    principal_submatrix,
    to_graph6,
)
from strategies import digraphs, graphs, params

K2 = Graph(2, frozenset({(0, 1)}))
LAP = MatrixParams.laplacian()


def rows(m) -> list:
    return [[int(x) if Fraction(x).denominator == 1 else x for x in r] for r in m.rows()]


def test_build_H_examples():
    assert rows(build_H(K2, LAP)) == [[1, -1], [-1, 1]]
    assert rows(build_H(K2, MatrixParams.adjacency())) == [[0, 1], [1, 0]]
    arc = Digraph(2, frozenset({(0, 1)}))
    assert rows(build_H(arc, MatrixParams.signless())) == [[1, 1], [0, 0]]


def test_a_alpha_preset():
    p = MatrixParams.a_alpha(Fraction(1, 3))
    assert (p.beta, p.gamma) == (Fraction(1, 3), Fraction(2, 3))
    with pytest.raises(ValueError):
        MatrixParams.a_alpha(Fraction(3, 2))


def test_principal_submatrix_keeps_original_degree():
    h = build_H(K2, LAP)
    assert rows(principal_submatrix(h, {1})) == [[1]]
    assert principal_submatrix(h, set()) == h
    assert principal_submatrix(h, {0, 1}).order == 0
    with pytest.raises(KeyError):
        principal_submatrix(h, {5})


@given(graphs(max_n=6), st.data())
def test_submatrix_composition(g, data):
    h = build_H(g, LAP)
    s = set(data.draw(st.sets(st.integers(0, g.n - 1))))
    t = set(data.draw(st.sets(st.integers(0, g.n - 1)))) - s
    assert principal_submatrix(principal_submatrix(h, s), t) == principal_submatrix(h, s | t)


@given(graphs(max_n=7))
def test_laplacian_rows_sum_to_zero(g):
    assert all(sum(r) == 0 for r in build_H(g, LAP).rows())


def test_delete_examples():
    k3 = complete_graph(3)
    p3 = delete_edge(k3, (0, 2))
    assert p3 == path_graph(3)
    assert delete_edge(K2, (1, 0)).edges == frozenset()
    digon = Digraph(2, frozenset({(0, 1), (1, 0)}))
    assert delete_arc(digon, (0, 1)).arcs == frozenset({(1, 0)})
    with pytest.raises(KeyError):
        delete_edge(p3, (0, 2))


def test_cycle_examples():
    for t in nonisomorphic_trees(7):
        assert all(cycles_through_vertex(t, v) == [] for v in range(t.n))
        assert all(cycles_through_edge(t, e) == [] for e in t.sorted_edges())
    c5 = cycle_graph(5)
    assert [c.length for c in cycles_through_vertex(c5, 2)] == [5]
    assert [c.length for c in cycles_through_edge(cycle_graph(4), (0, 1))] == [4]
    k4 = complete_graph(4)
    assert sorted(c.length for c in cycles_through_vertex(k4, 0)) == [3, 3, 3, 4, 4, 4]
    assert sorted(c.length for c in cycles_through_edge(k4, (1, 2))) == [3, 3, 4, 4]


def test_directed_cycle_examples():
    tri = Digraph(3, frozenset({(0, 1), (1, 2), (2, 0)}))
    assert [c.length for c in dicycles_through_vertex(tri, 0)] == [3]
    digon = Digraph(2, frozenset({(0, 1), (1, 0)}))
    assert [c.length for c in dicycles_through_vertex(digon, 0)] == [2]
    dag = Digraph(4, frozenset({(0, 1), (1, 2), (0, 2), (2, 3)}))
    assert all(dicycles_through_vertex(dag, v) == [] for v in range(4))


@given(graphs(max_n=6))
def test_cycle_census(g):
    # sum over v of cycles through v counts each cycle once per vertex
    census = all_cycles(g)
    assert len(set(c.vertices for c in census)) <= len(census)
    assert sum(len(cycles_through_vertex(g, v)) for v in range(g.n)) == sum(c.length for c in census)
    assert sum(len(cycles_through_edge(g, e)) for e in g.sorted_edges()) == sum(c.length for c in census)


@given(graphs(max_n=6))
def test_cycles_through_edge_also_through_endpoints(g):
    for e in g.sorted_edges():
        through_u = {c.vertices for c in cycles_through_vertex(g, e[0])}
        for c in cycles_through_edge(g, e):
            assert e[0] in c.vertices and e[1] in c.vertices
            assert c.vertices in through_u


@given(digraphs(max_n=5))
def test_dicycle_census(d):
    census = all_cycles(d)
    assert sum(len(dicycles_through_vertex(d, v)) for v in range(d.n)) == sum(c.length for c in census)
    assert sum(len(dicycles_through_arc(d, a)) for a in d.sorted_arcs()) == sum(c.length for c in census)


def test_parse_examples():
    p3 = parse_graph("3 2\n1 2\n2 3")
    assert p3 == path_graph(3) and is_bipartite(p3)
    assert not is_bipartite(cycle_graph(5))
    d = parse_graph("2 1 directed\n1 2")
    assert isinstance(d, Digraph) and d.arcs == frozenset({(0, 1)})
    assert parse_graph("# comment\n2 1 # trailing\n2 1\n") == K2


@pytest.mark.parametrize("text", [
    "", "3", "3 x", "3 2 undirected\n1 2\n2 3", "3 2\n1 2", "3 1\n1 4", "3 1\n2 2",
    "3 2\n1 2\n2 1", "3 1\n1 2 3", "-1 0",
])
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


@given(st.one_of(graphs(min_n=0, max_n=7), digraphs(min_n=0, max_n=5)))
def test_edge_list_round_trip(g):
    assert parse_graph(format_edge_list(g)) == g


@given(graphs(min_n=0, max_n=10))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_examples_and_errors():
    assert parse_graph6("Bw") == complete_graph(3)
    assert parse_graph6(">>graph6<<A_") == K2
    with pytest.raises(GraphFormatError):
        parse_graph6("B")
    with pytest.raises(GraphFormatError):
        parse_graph6("A ")
    with pytest.raises(SizeLimitError):
        parse_graph6("J" + "?" * 8)


@given(params, graphs(max_n=6))
def test_H_diagonal_and_symmetry(p, g):
    mp = MatrixParams(*p)
    h = build_H(g, mp).rows()
    for i in range(g.n):
        assert h[i][i] == mp.beta * g.degree(i)
        for j in range(g.n):
            assert h[i][j] == h[j][i]
