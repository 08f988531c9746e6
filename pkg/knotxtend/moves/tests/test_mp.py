# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import networkx as nx
import pytest

from knotxtend.diagram import Diagram, seifert_state
from knotxtend.graph import build_graph, ind
from knotxtend.invariants import jones
from knotxtend.moves import mp_move, expected_graph, apply_move
from knotxtend.data import trefoil
from knotxtend.utils import assert_raises
from knotxtend.utils.errors import NotSimple, UnknownIds


@pytest.fixture
def square():
    """Four crossings whose Seifert graph is a 4-cycle."""
    return Diagram([[7, 1, 4, 0], [1, 7, 2, 6], [5, 3, 6, 2], [3, 5, 0, 4]],
                   [1, 1, 1, 1])


def test_square_graph(square):
    g = build_graph(square).graph
    assert seifert_state(square).s == 4
    assert g.number_of_edges() == 4
    assert nx.cycle_basis(nx.Graph(g))
    assert ind(build_graph(square).marked()) == 1


def test_expected_graph(square):
    a, b = seifert_state(square).crossing_to_circles[1]
    g = expected_graph(square, 1, a)
    assert g.number_of_nodes() == 3
    assert nx.is_connected(g)


def test_move_lowers_circles(square):
    a, b = seifert_state(square).crossing_to_circles[1]
    out, params = mp_move(square, 1, a, return_params=True)
    assert seifert_state(out).s == 3
    assert out.num_components == square.num_components
    assert out.is_connected()
    assert jones(out) == jones(square)
    again = apply_move(square, 'mp', params)
    assert seifert_state(again).s == 3


def test_trefoil_edges_are_not_simple():
    d = trefoil()
    state = seifert_state(d)
    for e in range(d.num_crossings):
        v = state.crossing_to_circles[e][0]
        assert_raises(NotSimple, 'one of 3 crossings', mp_move, d, e, v)


def test_unknown_ids(square):
    assert_raises(UnknownIds, 'does not exist', mp_move, square, 9, 0)
    ends = seifert_state(square).crossing_to_circles[0]
    v = [k for k in range(4) if k not in ends][0]
    assert_raises(UnknownIds, 'is not an end', mp_move, square, 0, v)
