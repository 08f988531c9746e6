# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Factor slides: moving a connected summand along the strand of the
# other factor.
# Author: knotxtend developers
#
# License: BSD 3 clause

import networkx as nx

from ..diagram import Diagram, connected_sum
from ..diagram.surgery import crossing_graph, sum_cuts
from ..utils.errors import NotACut


def _split(diagram, cut):
    e, f = cut
    labels = diagram.edges
    if e == f or e not in labels or f not in labels:
        raise NotACut('%r is not a pair of distinct edges.' % (cut,))
    g = crossing_graph(diagram, skip=(e, f))
    if nx.number_connected_components(g) != 2:
        raise NotACut('Edges %d and %d do not split the diagram in two.'
                      % (e, f))
    side = nx.node_connected_component(g, diagram.head(e)[0])
    if diagram.tail(e)[0] in side:
        raise NotACut('Edges %d and %d do not split the diagram in two.'
                      % (e, f))
    return side


def factor_slide(diagram, cut, steps=1):
    """Slide the summand beyond edge `e` of `cut = (e, f)` along the
    strand of the other summand.

    Parameters
    ----------
    diagram : Diagram
    cut : (int, int)
        A 2-edge cut; the summand moved is the one holding the head of
        the first edge.
    steps : int (default: 1)
        Number of edges to move forward (negative: backward) along the
        other summand.

    Returns
    ----------
    diagram : Diagram

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt, connected_sum
    >>> t = parse_dt('4 6 2')
    >>> d = connected_sum(t, t)
    >>> factor_slide(d, sum_cuts(d)[0][:2]).num_crossings
    6

    """
    e, f = cut
    side = _split(diagram, cut)
    rows_a, signs_a, rows_b, signs_b = [], [], [], []
    for c, x in enumerate(diagram.crossings):
        if c in side:
            rows_b.append([f if v == e else v for v in x])
            signs_b.append(diagram.signs[c])
        else:
            rows_a.append([e if v == f else v for v in x])
            signs_a.append(diagram.signs[c])
    a = Diagram(rows_a, signs_a, diagram.free_loops)
    b = Diagram(rows_b, signs_b)
    target = e
    for _ in range(abs(steps)):
        if steps > 0:
            target = a.next_edge(target)
        else:
            c, p = a.tail(target)
            target = a.crossings[c][(p + 2) % 4]
    return connected_sum(a, b, target, f)


def factor_cuts(diagram):
    """2-edge cuts (e, f) whose first edge runs into the smaller
    summand."""
    out = []
    n = diagram.num_crossings
    for e, f, side in sum_cuts(diagram):
        out.append((e, f) if 2 * len(side) <= n else (f, e))
    return out
