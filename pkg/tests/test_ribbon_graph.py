import json

import networkx as nx
import pytest
from hypothesis import given, settings

from ribbon_alexander.ribbon_graph import (
    InvalidRibbonGraph,
    PathStep,
    RibbonGraph,
    RibbonMatrix,
    canonical_serialize,
    parse_graph,
    path,
    ribbon_matrix,
    validate,
)

from conftest import GENUS4_2R, GENUS4_GRAPH, ribbon_graphs


def kinds(g):
    return [p.kind for p in validate(g)]


def test_validate_examples():
    assert validate(RibbonGraph(1, (), ())) == []
    assert "Cyclic" in kinds(RibbonGraph(2, ((0, 1), (0, 1)), (0, 0)))
    assert validate(GENUS4_GRAPH) == []


def test_validate_names_offenders():
    problems = validate(RibbonGraph(3, ((0, 0), (1, 2)), (0, 7)))
    assert [p.kind for p in problems] == ["SelfLoop", "Disconnected", "BadVertexRef"]
    assert "edge 0" in problems[0].message
    assert "7" in problems[2].message
    assert kinds(RibbonGraph(2, ((0, 5),), (0,))) == ["BadVertexRef", "Disconnected"]


def test_path_examples():
    assert path(RibbonGraph(2, ((0, 1),), (1,)), 0) == [PathStep(0, True)]
    assert path(RibbonGraph(2, ((0, 1),), (0,)), 0) == [PathStep(0, False)]
    assert path(GENUS4_GRAPH, 0) == [PathStep(0, True), PathStep(2, True), PathStep(3, False)]
    with pytest.raises(IndexError):
        path(GENUS4_GRAPH, 4)


def test_ribbon_matrix_examples():
    assert ribbon_matrix(RibbonGraph(1, (), ())).doubled == ()
    assert ribbon_matrix(GENUS4_GRAPH).doubled == GENUS4_2R
    chain = RibbonGraph(3, ((0, 1), (1, 2)), (1, 0))
    assert ribbon_matrix(chain).doubled == ((1, -2), (0, -1))


def test_ribbon_matrix_rejects_invalid_graph():
    with pytest.raises(InvalidRibbonGraph, match="Cyclic"):
        ribbon_matrix(RibbonGraph(2, ((0, 1), (1, 0)), (0, 0)))


def test_ribbon_matrix_type_invariants():
    with pytest.raises(ValueError):
        RibbonMatrix(((0,),))
    with pytest.raises(ValueError):
        RibbonMatrix(((1, 1), (0, 1)))


def test_serialize_examples(tmp_path):
    assert canonical_serialize(RibbonGraph(1, (), ())) == '{"genus":0,"vertices":1,"edges":[],"singularity":[]}'
    text = canonical_serialize(GENUS4_GRAPH)
    assert parse_graph(text) == GENUS4_GRAPH
    assert canonical_serialize(parse_graph(text)) == text
    twin = RibbonGraph(5, [[0, 1], [2, 1], [1, 3], [4, 3]], [4, 0, 2, 1])
    assert canonical_serialize(twin).encode() == text.encode()


@pytest.mark.parametrize("text, kind", [
    ('{"genus":0,"vertices":1,"edges":[],"singularity":[],"extra":1}', "Malformed"),
    ('{"genus":1,"vertices":1,"edges":[{"tail":0,"head":0}],"singularity":[0]}', "Malformed"),
    ('{"genus":1,"vertices":2,"edges":[{"tail":0,"head":0}],"singularity":[0]}', "SelfLoop"),
    ('{"genus":1,"vertices":2,"edges":[{"tail":0,"head":1}],"singularity":[2]}', "BadVertexRef"),
    ('{"genus":1,"vertices":2,"edges":[{"tail":0,"head":true}],"singularity":[0]}', "Malformed"),
    ('[1, 2]', "Malformed"),
    ('{"genus":', "Malformed"),
])
def test_parse_rejects(text, kind):
    with pytest.raises(InvalidRibbonGraph) as info:
        parse_graph(text)
    assert kind in [p.kind for p in info.value.problems]


def nx_tree(g):
    t = nx.Graph()
    t.add_nodes_from(range(g.vertices))
    for e, (a, b) in enumerate(g.edges):
        t.add_edge(a, b, id=e)
    return t


@settings(max_examples=200, deadline=None)
@given(ribbon_graphs(min_genus=1))
def test_path_is_the_tree_path(g):
    tree = nx_tree(g)
    for i, (tail, head) in enumerate(g.edges):
        steps = path(g, i)
        s = g.singularity[i]
        # The midpoint of e_i sits between tail and head; the path leaves
        # toward whichever end is on the singularity's side.
        d_head = nx.shortest_path_length(tree, head, s)
        d_tail = nx.shortest_path_length(tree, tail, s)
        start = head if d_head < d_tail else tail
        assert steps[0] == PathStep(i, start == head)
        nodes = nx.shortest_path(tree, start, s)
        expected = [PathStep(tree[u][v]["id"], g.edges[tree[u][v]["id"]] == (u, v))
                    for u, v in zip(nodes, nodes[1:])]
        assert steps[1:] == expected
        assert len({st.edge for st in steps}) == len(steps)


@settings(max_examples=200, deadline=None)
@given(ribbon_graphs())
def test_ribbon_matrix_column_support(g):
    r = ribbon_matrix(g).doubled
    for i in range(g.genus):
        steps = path(g, i)
        assert r[i][i] == (1 if steps[0].forward else -1)
        support = {j for j in range(g.genus) if j != i and r[j][i]}
        assert support == {st.edge for st in steps[1:]}
        for st in steps[1:]:
            assert r[st.edge][i] == (2 if st.forward else -2)


@settings(max_examples=100, deadline=None)
@given(ribbon_graphs())
def test_serialize_round_trip(g):
    text = canonical_serialize(g)
    assert parse_graph(text) == g
    assert json.loads(text)["genus"] == g.genus
