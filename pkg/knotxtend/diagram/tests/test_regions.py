# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.diagram import regions, unknot, Diagram
from knotxtend.diagram.regions import trace_faces
from knotxtend.data import trefoil, figure_eight, kink, torus_2
from knotxtend.utils.errors import DisconnectedDiagram


def test_region_counts():
    assert regions(trefoil()).count == 5
    assert regions(figure_eight()).count == 6
    assert regions(kink()).count == 3
    assert len(regions(torus_2(6))) == 8


def test_unknot_regions():
    r = regions(unknot())
    assert r.count == 2
    assert r.adjacency == {(0, 1)}


def test_every_edge_bounds_two_regions():
    d = figure_eight()
    r = regions(d)
    for label in d.edges:
        left, right = r.edge_regions(label)
        assert left != right
        assert label in r.regions[left]
        assert label in r.regions[right]


def test_dual_graph():
    d = trefoil()
    g = regions(d).dual_graph()
    assert g.number_of_nodes() == 5
    assert g.number_of_edges() == d.num_edges
    # two triangles and three bigons
    assert sorted(dict(g.degree()).values()) == [2, 2, 2, 3, 3]


def test_disconnected():
    k = kink()
    with pytest.raises(DisconnectedDiagram):
        regions(Diagram(k.crossings, k.signs, free_loops=1))


def test_trace_faces_with_leaf():
    # a path a - b - c has a single face walking both sides
    rotation = {'a': [('a', 'b')], 'b': [('b', 'a'), ('b', 'c')],
                'c': [('c', 'b')]}
    twin = {('a', 'b'): ('b', 'a'), ('b', 'a'): ('a', 'b'),
            ('b', 'c'): ('c', 'b'), ('c', 'b'): ('b', 'c')}
    faces = trace_faces(rotation, twin)
    assert len(faces) == 1
    assert len(faces[0]) == 4
