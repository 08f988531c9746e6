# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Bridges and tunnels: maximal strand pieces passing every crossing
# on the same level.
# Author: knotxtend developers
#
# License: BSD 3 clause


class Bridge(object):

    """A maximal over-passing (bridge) or under-passing (tunnel) piece.

    Attributes
    ----------
    edges : list of int
        Edge labels e_0 .. e_l along the strand; the heads of e_0 .. e_l-1
        are the passed crossings.
    crossings : list of int
    over : bool
        True for a bridge, False for a tunnel.
    regions : ((int, int), (int, int))
        (left, right) faces of the first and of the last edge.

    """
    def __init__(self, edges, crossings, over, regions=None):
        self.edges = list(edges)
        self.crossings = list(crossings)
        self.over = over
        self.regions = regions

    @property
    def length(self):
        return len(self.crossings)

    @property
    def first(self):
        return self.edges[0]

    @property
    def last(self):
        return self.edges[-1]

    @property
    def start_crossing(self):
        return self.crossings[0]

    @property
    def end_crossing(self):
        return self.crossings[-1]

    def windows(self, min_length=1):
        """(first, last, length) of the sub-pieces, longest first."""
        out = []
        for length in range(self.length, min_length - 1, -1):
            for i in range(self.length - length + 1):
                out.append((self.edges[i], self.edges[i + length], length))
        return out

    def __repr__(self):
        return 'Bridge(edges=%r, over=%r)' % (self.edges, self.over)


def find_bridges(diagram):
    """All maximal bridges and tunnels.

    Components passing every crossing on one level have no maximal
    piece and are skipped.

    Parameters
    ----------
    diagram : Diagram

    Returns
    ----------
    bridges : list of Bridge
        Per component, bridges before tunnels, each in the order of
        their first edge along the component.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> [b.length for b in find_bridges(parse_dt('4 6 2'))]
    [1, 1, 1, 1, 1, 1]

    """
    if not diagram.crossings:
        return []
    index = diagram.face_index()
    out = []
    for cycle in diagram.components():
        flags = [diagram.head(e)[1] != 0 for e in cycle]
        if all(flags) or not any(flags):
            continue
        n = len(cycle)
        for over in (True, False):
            for k in range(n):
                if flags[k] != over or flags[k - 1] == over:
                    continue
                edges = [cycle[k]]
                crossings = []
                j = k
                while flags[j % n] == over:
                    crossings.append(diagram.head(cycle[j % n])[0])
                    j += 1
                    edges.append(cycle[j % n])
                regions = tuple((diagram.left_face(e, index),
                                 diagram.right_face(e, index))
                                for e in (edges[0], edges[-1]))
                out.append(Bridge(edges, crossings, over, regions))
    return out


def max_bridge_length(diagram):
    return max([b.length for b in find_bridges(diagram)] or [0])
