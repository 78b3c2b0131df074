import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbdom.cotree import Cotree, Kind, cotree_to_graph, parse_cotree, recognize_cograph
from mbdom.errors import ParseError
from mbdom.graph import (
    Graph,
    closed_neighborhood,
    complete,
    cycle,
    delete_closed_neighborhood,
    glue,
    hanging_split,
    join,
    parse_edge_list,
    parse_json_graph,
    path,
    star,
    union,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def cotrees(draw, max_leaves=8):
    leaves = draw(st.integers(1, max_leaves))

    def build(k):
        if k == 1:
            return Cotree.leaf()
        cut = draw(st.integers(1, k - 1))
        kind = draw(st.sampled_from([Kind.UNION, Kind.JOIN]))
        return Cotree(kind, (build(cut), build(k - cut)))

    return build(leaves)


def has_induced_p4(g: Graph) -> bool:
    for quad in itertools.permutations(range(g.n), 4):
        a, b, c, d = quad
        if a > d:
            continue
        want = {(a, b), (b, c), (c, d)}
        present = {(x, y) for x, y in itertools.combinations(quad, 2) if g.has_edge(x, y)}
        norm = {tuple(sorted(e)) for e in want}
        if {tuple(sorted(e)) for e in present} == norm:
            return True
    return False


# -- parsing -----------------------------------------------------------


def test_parse_single_edge():
    g = parse_edge_list("2 1\n0 1")
    assert g == complete(2)


def test_parse_path_and_edgeless():
    assert parse_edge_list("4 3\n0 1\n1 2\n2 3") == path(4)
    g = parse_edge_list("3 0")
    assert g.n == 3 and g.edge_count == 0


def test_parse_crlf_and_duplicates():
    g = parse_edge_list("3 3\r\n0 1\r\n1 0\r\n1 2\r\n")
    assert g == path(3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n0 3", 2),
        ("3 1\n1 1", 2),
        ("3 2\n0 1\nzero two", 3),
        ("x y", 1),
        ("3 2\n0 1", 3),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_json_roundtrip():
    g = cycle(5)
    assert parse_json_graph(g.to_json()) == g
    assert json.loads(g.to_json()) == {"n": 5, "edges": [[0, 1], [0, 4], [1, 2], [2, 3], [3, 4]]}


@given(graphs())
def test_edge_list_roundtrip_and_symmetry(g):
    h = parse_edge_list(g.to_edge_list())
    assert h == g
    for u in range(h.n):
        assert u not in h.adjacency[u]
        for v in h.adjacency[u]:
            assert u in h.adjacency[v]
            assert 0 <= v < h.n


# -- operators ---------------------------------------------------------


def test_union_examples():
    assert union(Graph.empty(1), Graph.empty(1)) == Graph.empty(2)
    two = union(path(2), path(2))
    assert two.n == 4 and two.edges == ((0, 1), (2, 3))
    big = union(path(4), cycle(5))
    assert (big.n, big.edge_count) == (9, 8)


def test_join_examples():
    assert join(Graph.empty(1), Graph.empty(1)) == complete(2)
    p3 = join(Graph.empty(1), Graph.empty(2))
    assert p3.degree(0) == 2 and p3.edge_count == 2
    assert join(path(2), path(2)) == complete(4)


@given(graphs(5), graphs(5))
def test_join_edge_count(g, h):
    assert join(g, h).edge_count == g.edge_count + h.edge_count + g.n * h.n


def test_glue_examples():
    res = glue(path(2), 1, path(2), 0)
    assert res.graph.n == 3 and res.graph.degree(res.w) == 2
    assert res.w == 1
    p5 = glue(path(3), 2, path(3), 0).graph
    assert sorted(p5.degree_sequence()) == sorted(path(5).degree_sequence())
    assert p5.is_tree()
    c = glue(cycle(5), 3, path(2), 1).graph
    assert (c.n, c.edge_count) == (6, 6)


def test_glue_merged_vertex_neighborhood():
    g, h = cycle(5), star(3)
    res = glue(g, 2, h, 0)
    expected = set(g.adjacency[2]) | {res.h_map[x] for x in h.adjacency[0]}
    assert set(res.graph.adjacency[res.w]) == expected
    assert res.g_map == tuple(range(5))
    # g keeps its numbering
    for u, v in g.edges:
        assert res.graph.has_edge(u, v)


@given(graphs(6), st.data())
def test_glue_with_k1_is_identity(h, data):
    if h.n == 0:
        return
    v = data.draw(st.integers(0, h.n - 1))
    res = glue(Graph.empty(1), 0, h, v)
    # relabel through h_map and compare edge sets
    mapped = {tuple(sorted((res.h_map[a], res.h_map[b]))) for a, b in h.edges}
    assert res.graph.n == h.n
    assert mapped == set(res.graph.edges)


def test_glue_invalid_vertex():
    with pytest.raises(IndexError):
        glue(path(2), 2, path(2), 0)


def test_generators():
    hs2 = hanging_split(2)
    assert (hs2.n, hs2.edge_count) == (3, 2)
    assert hs2.degree(0) == 1  # P3 with the distinguished vertex at an end
    hs3 = hanging_split(3)
    assert (hs3.n, hs3.edge_count) == (5, 5)
    assert hs3.degree_sequence() == (3, 3, 2, 1, 1)
    assert star(3).degree_sequence() == (3, 1, 1, 1)
    assert star(3).degree(0) == 3
    for bad in (lambda: cycle(2), lambda: hanging_split(1), lambda: path(0)):
        with pytest.raises(ValueError):
            bad()


def test_closed_neighborhood():
    assert closed_neighborhood(Graph.empty(1), 0) == {0}
    assert closed_neighborhood(path(3), 1) == {0, 1, 2}
    assert closed_neighborhood(cycle(5), 0) == {4, 0, 1}
    with pytest.raises(IndexError):
        closed_neighborhood(path(3), 3)


def test_delete_closed_neighborhood():
    g, mapping = delete_closed_neighborhood(path(3), 1)
    assert g.n == 0 and mapping == ()
    g, mapping = delete_closed_neighborhood(path(4), 0)
    assert g == complete(2) and mapping == (2, 3)
    g, mapping = delete_closed_neighborhood(cycle(5), 0)
    assert g == path(2) and mapping == (2, 3)


# -- cotrees -----------------------------------------------------------


def test_parse_cotree_examples():
    assert parse_cotree(".") == Cotree.leaf()
    k2 = parse_cotree("J(.,.)")
    assert k2 == Cotree.join(Cotree.leaf(), Cotree.leaf())
    assert cotree_to_graph(k2) == complete(2)
    p3 = cotree_to_graph(parse_cotree("J(., U(., .))"))
    assert p3.degree_sequence() == (2, 1, 1) and p3.degree(0) == 2


def test_cotree_to_graph_examples():
    assert cotree_to_graph(Cotree.leaf()) == Graph.empty(1)
    two_k2 = cotree_to_graph(parse_cotree("U(J(.,.),J(.,.))"))
    assert two_k2.edges == ((0, 1), (2, 3))


@pytest.mark.parametrize(
    "text, offset",
    [("U(.)", 0), ("J(.,.", 5), ("X", 0), ("J(.,.))", 6), ("", 0), ("U(.,,.)", 4)],
)
def test_parse_cotree_errors(text, offset):
    with pytest.raises(ParseError) as exc:
        parse_cotree(text)
    assert exc.value.offset == offset


@settings(max_examples=60)
@given(cotrees())
def test_cotree_graphs_are_p4_free(e):
    g = cotree_to_graph(e)
    assert g.n == e.size
    assert not has_induced_p4(g)
    assert parse_cotree(str(e)) == e


def test_recognize_cograph_examples():
    assert recognize_cograph(path(4)) is None
    k4 = recognize_cograph(complete(4))
    assert k4.kind is Kind.JOIN and all(c.kind is Kind.LEAF for c in k4.children)
    p3 = recognize_cograph(path(3))
    assert p3.kind is Kind.JOIN
    kinds = sorted(c.kind.value for c in p3.children)
    assert kinds == [".", "U"]


@settings(max_examples=80)
@given(graphs(7))
def test_recognition_matches_p4_oracle(g):
    rec = recognize_cograph(g)
    if g.n == 0:
        return
    assert (rec is None) == has_induced_p4(g)
    if rec is not None:
        labels = rec.leaf_labels()
        assert sorted(labels) == list(range(g.n))
        rebuilt = cotree_to_graph(rec)
        # leaf i of the rebuilt graph is vertex labels[i] of g
        assert {tuple(sorted((labels[a], labels[b]))) for a, b in rebuilt.edges} == set(g.edges)
