# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# The Seifert circle reducing move at a simple edge of the Seifert
# graph.
# Author: knotxtend developers
#
# License: BSD 3 clause

import networkx as nx

from ..diagram import seifert_state
from ..diagram._diagram import over_in, over_out
from ..graph import build_graph
from ..utils.errors import (KnotxtendError, UnknownIds, NotSimple,
                            PatternMismatch)
from ._routing import _OpenMap, draw_route


def expected_graph(diagram, e, v):
    """Simple graph G \\e v predicted for the move at crossing `e` and
    circle `v`, marks dropped."""
    sg = build_graph(diagram)
    a, b = seifert_state(diagram).crossing_to_circles[e]
    w = b if a == v else a
    g = sg.marked().move((a, b), v).to_networkx()
    g.add_nodes_from(u for u in sg.graph.nodes if u != w)
    return _plain(g)


def _plain(g):
    out = nx.Graph()
    out.add_nodes_from(g.nodes)
    out.add_edges_from(g.edges())
    return out


def _windows(diagram, e):
    """(first, last, over) of the over- and under-strand through `e`."""
    x = diagram.crossings[e]
    sign = diagram.signs[e]
    return [(x[over_in(sign)], x[over_out(sign)], True),
            (x[0], x[2], False)]


def mp_move(diagram, e, v, max_length=None, return_params=False):
    """Lower the number of Seifert circles by one at crossing `e`.

    One of the two strands through `e` is taken out together with `e`
    and drawn back over (or under) the rest of the diagram. The first
    route, by length, whose result has one Seifert circle less and the
    Seifert graph G \\e v (marks ignored) is returned.

    Parameters
    ----------
    diagram : Diagram
        Connected diagram.
    e : int
        Crossing id, a simple edge of the Seifert graph.
    v : int
        Seifert circle id, an end of `e`.
    max_length : int (default: None)
        Longest route tried; None uses c + 1.
    return_params : bool (default: False)
        Also return the reroute parameters.

    Returns
    ----------
    diagram : Diagram

    """
    if not isinstance(e, int) or not 0 <= e < diagram.num_crossings:
        raise UnknownIds('Crossing %r does not exist.' % (e,))
    state = seifert_state(diagram)
    if v not in state.crossing_to_circles[e]:
        raise UnknownIds('Circle %r is not an end of crossing %d; its ends'
                         ' are %r.' % (v, e, state.crossing_to_circles[e]))
    a, b = state.crossing_to_circles[e]
    sg = build_graph(diagram)
    if sg.graph.number_of_edges(a, b) > 1:
        raise NotSimple('Crossing %d is one of %d crossings joining'
                        ' circles %d and %d.'
                        % (e, sg.graph.number_of_edges(a, b), a, b))
    target = expected_graph(diagram, e, v)
    if max_length is None:
        max_length = diagram.num_crossings + 1
    for first, last, over in _windows(diagram, e):
        try:
            om = _OpenMap.cut(diagram, first, last, over)
        except KnotxtendError:
            continue
        for route in om.routes(max_length):
            try:
                out = draw_route(om.copy(), route)
            except KnotxtendError:
                continue
            if not out.is_connected():
                continue
            if seifert_state(out).s != state.s - 1:
                continue
            if not nx.is_isomorphic(_plain(build_graph(out).graph), target):
                continue
            if return_params:
                return out, {'first': first, 'last': last, 'over': over,
                             'route': list(route)}
            return out
    raise PatternMismatch('No strand reroute at crossing %d realizes the'
                          ' move towards circle %d.' % (e, v))
