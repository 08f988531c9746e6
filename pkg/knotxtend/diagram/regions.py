# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Regions (faces) of a diagram and a face tracer for rotation systems.
# Author: knotxtend developers
#
# License: BSD 3 clause

import networkx as nx

from ..utils.errors import DisconnectedDiagram


def trace_faces(rotation, twin):
    """Faces of a map given as a rotation system.

    Parameters
    ----------
    rotation : dict
        Vertex -> list of darts leaving the vertex, counterclockwise.
        Vertices of degree one are allowed; the tracer turns around them.
    twin : dict
        Dart -> the dart traversing the same edge in the other direction.

    Returns
    ----------
    faces : list of lists
        Dart cycles; each face lies to the left of its darts.

    """
    where = {}
    for v, darts in rotation.items():
        for i, d in enumerate(darts):
            where[d] = (v, i)
    seen = set()
    faces = []
    for v in rotation:
        for start in rotation[v]:
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                w, i = where[twin[d]]
                darts = rotation[w]
                d = darts[(i - 1) % len(darts)]
            faces.append(face)
    return faces


class RegionMap(object):

    """Regions of a connected diagram.

    Attributes
    ----------
    regions : list of lists
        Boundary edge labels of each region, in the cyclic order met
        while walking with the region on the left.
    darts : list of lists
        The same boundaries as darts (crossing, position).
    adjacency : set of (int, int)
        Sorted region pairs that share at least one edge.

    """
    def __init__(self, diagram):
        self.diagram = diagram
        if not diagram.crossings:
            self.darts = [[], []]
            self.regions = [[0], [0]]
            self.adjacency = {(0, 1)}
            self._index = {}
            return
        self.darts = [list(f) for f in diagram.faces()]
        self._index = diagram.face_index()
        self.regions = [[diagram.crossings[c][p] for c, p in f]
                        for f in self.darts]
        adj = set()
        for label in diagram.edges:
            a, b = self.edge_regions(label)
            adj.add((min(a, b), max(a, b)))
        self.adjacency = adj

    def __len__(self):
        return len(self.regions)

    @property
    def count(self):
        return len(self.regions)

    def edge_regions(self, label):
        """(left region, right region) of an edge in its direction."""
        d = self.diagram
        return self._index[d.tail(label)], self._index[d.head(label)]

    def corner(self, c, k):
        """Region at corner k of crossing c, between positions k and
        k + 1."""
        return self._index[(c, k % 4)]

    def corners(self, c):
        return [self._index[(c, k)] for k in range(4)]

    def dual_graph(self):
        """Multigraph on regions with one edge per diagram edge, keyed by
        its label."""
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.count))
        for label in self.diagram.edges:
            a, b = self.edge_regions(label)
            g.add_edge(a, b, key=label)
        return g


def regions(diagram):
    """Faces of a connected diagram.

    Parameters
    ----------
    diagram : Diagram

    Returns
    ----------
    region_map : RegionMap
        Holds c + 2 regions.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> regions(parse_dt('4 6 2')).count
    5

    """
    if not diagram.is_connected():
        raise DisconnectedDiagram('regions() needs a connected diagram; got'
                                  ' %d pieces.'
                                  % (len(diagram.connected_parts()) +
                                     diagram.free_loops))
    return RegionMap(diagram)
