# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Reduced marked graphs and the vertex operations of the index
# recursions.
# Author: knotxtend developers
#
# License: BSD 3 clause

from collections import namedtuple

import networkx as nx

Edge = namedtuple('Edge', ['marked', 'sign', 'ids'])


def _key(u, v):
    return (u, v) if u < v else (v, u)


class MarkedGraph(object):

    """Simple graph whose marked edges cannot be chosen by the index
    recursions.

    A marked edge stands for a multiple edge, or for an edge that a
    diagram move turned into one. Every edge records its sign (0 when
    merged from edges of both signs) and the set of original edge ids
    it carries.

    Parameters
    ----------
    edges : dict
        (u, v) with u < v -> Edge.

    """
    __slots__ = ('edges',)

    def __init__(self, edges):
        self.edges = dict(edges)

    @classmethod
    def reduce(cls, items):
        """Merge parallel edges into marked ones and drop loops.

        Parameters
        ----------
        items : iterable of (u, v, Edge)

        """
        out = {}
        for u, v, edge in items:
            if u == v:
                continue
            k = _key(u, v)
            old = out.get(k)
            if old is None:
                out[k] = edge
            else:
                sign = old.sign if old.sign == edge.sign else 0
                out[k] = Edge(True, sign, old.ids | edge.ids)
        return cls(out)

    def __len__(self):
        return len(self.edges)

    def vertices(self):
        return sorted(set(v for k in self.edges for v in k))

    def neighbors(self, v):
        return set(b if a == v else a for a, b in self.edges if v in (a, b))

    def to_networkx(self, signed=False):
        """nx.Graph with a string edge attribute 'label'."""
        g = nx.Graph()
        for (u, v), edge in self.edges.items():
            if edge.marked:
                label = 'm'
            elif signed:
                label = 'u%+d' % edge.sign
            else:
                label = 'u'
            g.add_edge(u, v, label=label)
        return g

    def is_bipartite(self):
        return nx.is_bipartite(self.to_networkx())

    def is_two_connected(self):
        """No unmarked edge disconnects the graph."""
        if len(self.edges) < 2:
            return True
        g = self.to_networkx()
        return all(self.edges[_key(u, v)].marked for u, v in nx.bridges(g))

    def blocks(self):
        """Block components as MarkedGraphs."""
        g = self.to_networkx()
        out = []
        for comp in nx.biconnected_component_edges(g):
            out.append(MarkedGraph({_key(u, v): self.edges[_key(u, v)]
                                    for u, v in comp}))
        return out

    def opposite_side(self, v, w):
        """Vertices y for which some neighbour x of v, other than w and
        y, separates y from w once v is deleted."""
        g = self.to_networkx()
        out = set()
        for x in self.neighbors(v):
            if x == w:
                continue
            h = g.copy()
            h.remove_nodes_from([v, x])
            near = nx.node_connected_component(h, w)
            out.update(y for y in h.nodes if y not in near)
        return out

    def contract(self, v):
        """G / v: contract the star of `v` into `v`."""
        star = self.neighbors(v)
        items = []
        for (a, b), edge in self.edges.items():
            if v in (a, b):
                continue
            a2 = v if a in star else a
            b2 = v if b in star else b
            items.append((a2, b2, edge))
        return MarkedGraph.reduce(items)

    def move(self, e, v, bands=False):
        """The graph after the diagram move at edge `e` and its end `v`.

        Edges at `v` towards the side of `e` get marked, edges of `w`
        (the other end of `e`) move to `v`, and edges from neighbours of
        `v` to vertices on the side of `e` move to `v`. With `bands`, the
        last kind of edge gets marked as well.
        """
        a, b = e
        w = b if a == v else a
        star = self.neighbors(v)
        opposite = self.opposite_side(v, w)
        items = []
        for (p, q), edge in self.edges.items():
            if v in (p, q):
                other = q if p == v else p
                if other == w:
                    continue
                if other in opposite:
                    items.append((v, other, edge))
                else:
                    items.append((v, other, edge._replace(marked=True)))
                continue
            near = [t for t in (p, q) if t in star]
            if not near:
                items.append((p, q, edge))
            elif w in (p, q):
                other = q if p == w else p
                items.append((v, other, edge))
            elif len(near) == 2:
                # only in graphs that are not bipartite
                items.append((p, q, edge))
            else:
                other = q if p == near[0] else p
                if other in opposite:
                    items.append((p, q, edge))
                elif bands:
                    items.append((v, other, edge._replace(marked=True)))
                else:
                    items.append((v, other, edge))
        return MarkedGraph.reduce(items)

    def __repr__(self):
        return 'MarkedGraph(%r)' % sorted(
            (k, e.marked, e.sign) for k, e in self.edges.items())


def from_edge_list(edges):
    """MarkedGraph from (u, v, sign) triples, ids being list positions.
    Multiple edges come out marked."""
    return MarkedGraph.reduce(
        (u, v, Edge(False, sign, frozenset([i])))
        for i, (u, v, sign) in enumerate(edges))
