import pytest

from totaldiff.graph import (
    EdgeListParseError, Graph, GraphError, INFINITE, diameter, emit_edge_list,
    parse_edge_list,
)


def test_from_edges_basic():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3
    assert g.edge_count() == 3
    assert list(g.edges()) == [(0, 1), (0, 2), (1, 2)]
    assert g.adj[1] == (0, 2)
    assert g.has_edge(2, 0) and not Graph.from_edges(2, [(0, 1)]).has_edge(0, 0)


def test_from_edges_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(GraphError):
        Graph.from_edges(-1, [])


def test_degrees():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.degree(1) == 2
    assert g.degree(0) == 1
    assert g.max_degree() == 2
    with pytest.raises(GraphError):
        g.degree(4)


def test_diameter():
    path4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert diameter(path4) == 3
    cycle6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    assert diameter(cycle6) == 3
    star5 = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    assert diameter(star5) == 2
    disconnected = Graph.from_edges(3, [(0, 1)])
    assert diameter(disconnected) == INFINITE
    with pytest.raises(GraphError):
        diameter(Graph.from_edges(0, []))


def test_parse_edge_list():
    g = parse_edge_list("3 3\n0 1\n1 2\n0 2\n")
    assert g.edge_count() == 3
    g = parse_edge_list("2 1\n0 1")
    assert list(g.edges()) == [(0, 1)]


def test_parse_errors_carry_line_numbers():
    with pytest.raises(EdgeListParseError) as exc:
        parse_edge_list("3 2\n0 1\n0 3\n")
    assert exc.value.line_no == 3
    with pytest.raises(EdgeListParseError) as exc:
        parse_edge_list("nope\n")
    assert exc.value.line_no == 1
    with pytest.raises(EdgeListParseError):
        parse_edge_list("2 2\n0 1\n")
    with pytest.raises(EdgeListParseError):
        parse_edge_list("2 1\n1 1\n")
    with pytest.raises(EdgeListParseError):
        parse_edge_list("2 2\n0 1\n1 0\n")


def test_round_trip():
    g = Graph.from_edges(5, [(0, 1), (0, 2), (2, 3), (3, 4), (1, 4)])
    assert parse_edge_list(emit_edge_list(g)) == g
