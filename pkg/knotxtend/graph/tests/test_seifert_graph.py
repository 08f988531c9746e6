# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.diagram import Diagram, seifert_state
from knotxtend.graph import build_graph, SeifertGraph
from knotxtend.data import trefoil, figure_eight, torus_2, knot
from knotxtend.utils.errors import DisconnectedDiagram


def test_trefoil_graph():
    g = build_graph(trefoil())
    assert (g.num_vertices, g.num_edges) == (2, 3)
    assert g.multiplicities() == [3]
    assert g.is_bipartite()


def test_figure_eight_graph():
    g = build_graph(figure_eight())
    assert (g.num_vertices, g.num_edges) == (3, 4)
    assert g.multiplicities() == [2, 2]
    assert len(g.blocks()) == 2
    assert g.block_tree().number_of_nodes() == 3


def test_torus_graph():
    g = build_graph(torus_2(9))
    assert g.multiplicities() == [9]
    m = g.marked()
    assert len(m) == 1
    assert m.edges[(0, 1)].ids == frozenset(range(9))


@pytest.mark.parametrize('name', ['4_1', '5_2', '6_1', '6_2', '6_3'])
def test_graph_matches_state(name):
    d = knot(name)
    g = build_graph(d)
    st = seifert_state(d)
    assert g.num_vertices == st.s
    assert g.num_edges == d.num_crossings
    assert g.is_bipartite()
    for v, side in g.graph.nodes(data='side'):
        assert side in (1, -1)
    for u, v in g.graph.edges():
        assert g.graph.nodes[u]['side'] != g.graph.nodes[v]['side']
    assert sorted(sum(g.rotation.values(), [])) == \
        sorted(2 * list(range(d.num_crossings)))


def test_signs_on_edges():
    d = figure_eight()
    g = build_graph(d)
    for u, v, k, sign in g.graph.edges(keys=True, data='sign'):
        assert sign == d.signs[k]


def test_disconnected_is_rejected():
    k = trefoil()
    with pytest.raises(DisconnectedDiagram):
        build_graph(Diagram(k.crossings, k.signs, free_loops=1))


def test_adjacency_text():
    g = SeifertGraph.from_edges([(0, 1, 1), (1, 2, -1)], marked=[1])
    assert g.to_adjacency_text() == '0 1 +1 0\n1 2 -1 1\n'
    assert g.marked().edges[(1, 2)].marked
