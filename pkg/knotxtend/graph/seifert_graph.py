# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# The signed Seifert graph of a diagram.
# Author: knotxtend developers
#
# License: BSD 3 clause

import networkx as nx

from ..diagram import seifert_state
from ..utils import check_connected
from .marked import Edge, MarkedGraph


class SeifertGraph(object):

    """Plane bipartite signed multigraph of Seifert circles and crossings.

    Parameters
    ----------
    graph : networkx.MultiGraph
        Nodes carry the attribute 'side' (+1 or -1, the bipartition),
        edges are keyed by crossing id and carry 'sign' and 'marked'.
    rotation : dict (default: None)
        Seifert circle -> crossings met along it, in traversal order.

    Attributes
    ----------
    graph : networkx.MultiGraph
    rotation : dict

    """
    def __init__(self, graph, rotation=None):
        self.graph = graph
        self.rotation = {} if rotation is None else rotation

    @classmethod
    def from_edges(cls, edges, marked=()):
        """Graph from (u, v, sign) triples; edge keys are list positions.

        Examples
        -----------
        >>> g = SeifertGraph.from_edges([(0, 1, 1), (0, 1, 1), (0, 1, 1)])
        >>> g.num_vertices, g.num_edges
        (2, 3)

        """
        g = nx.MultiGraph()
        marked = set(marked)
        for i, (u, v, sign) in enumerate(edges):
            g.add_edge(u, v, key=i, sign=sign, marked=i in marked)
        _set_sides(g)
        return cls(g)

    @property
    def num_vertices(self):
        return self.graph.number_of_nodes()

    @property
    def num_edges(self):
        return self.graph.number_of_edges()

    def is_bipartite(self):
        return nx.is_bipartite(self.graph)

    def multiplicities(self):
        """Sorted multiplicities of the vertex pairs joined by edges."""
        simple = nx.Graph(self.graph)
        return sorted(self.graph.number_of_edges(u, v)
                      for u, v in simple.edges)

    def blocks(self):
        """Crossing ids of each block, sorted."""
        simple = nx.Graph(self.graph)
        out = []
        for comp in nx.biconnected_components(simple):
            ids = sorted(k for u, v, k in self.graph.edges(keys=True)
                         if u in comp and v in comp)
            out.append(ids)
        return sorted(out)

    def block_tree(self):
        """Bipartite tree of blocks (as ('block', i)) and cut vertices."""
        simple = nx.Graph(self.graph)
        tree = nx.Graph()
        cuts = set(nx.articulation_points(simple))
        comps = sorted(sorted(c) for c in nx.biconnected_components(simple))
        for i, comp in enumerate(comps):
            tree.add_node(('block', i))
            for v in comp:
                if v in cuts:
                    tree.add_edge(('block', i), v)
        return tree

    def marked(self):
        """The reduced MarkedGraph the index recursions run on."""
        return MarkedGraph.reduce(
            (u, v, Edge(bool(d['marked']), d['sign'], frozenset([k])))
            for u, v, k, d in self.graph.edges(keys=True, data=True))

    def to_adjacency_text(self):
        """One line 'u v sign mark' per edge, sorted by edge key."""
        rows = sorted((k, min(u, v), max(u, v), d['sign'], int(d['marked']))
                      for u, v, k, d in self.graph.edges(keys=True,
                                                         data=True))
        return '\n'.join('%d %d %+d %d' % r[1:] for r in rows) + '\n'

    def __repr__(self):
        return 'SeifertGraph(v=%d, e=%d)' % (self.num_vertices,
                                             self.num_edges)


def _set_sides(g):
    if not nx.is_bipartite(g):
        return
    for comp in nx.connected_components(g):
        coloring = nx.bipartite.color(g.subgraph(comp))
        for v, col in coloring.items():
            g.nodes[v]['side'] = 1 if col == 0 else -1


def build_graph(diagram):
    """Seifert graph: a vertex per Seifert circle, an edge per crossing.

    Parameters
    ----------
    diagram : Diagram
        Must be connected.

    Returns
    ----------
    graph : SeifertGraph

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> build_graph(parse_dt('4 6 8 2')).multiplicities()
    [2, 2]

    """
    check_connected(diagram, 'The Seifert graph')
    st = seifert_state(diagram)
    g = nx.MultiGraph()
    g.add_nodes_from(range(st.s))
    for x, (a, b) in enumerate(st.crossing_to_circles):
        g.add_edge(a, b, key=x, sign=diagram.signs[x], marked=False)
    _set_sides(g)
    rotation = {}
    for k, cyc in enumerate(st.circles):
        rotation[k] = [diagram.head(e)[0] for e in cyc]
    return SeifertGraph(g, rotation)
