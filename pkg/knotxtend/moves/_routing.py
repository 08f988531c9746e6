# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Cutting a strand piece out of a diagram and drawing it back along a
# new path that passes every crossed edge on the same level.
# Author: knotxtend developers
#
# License: BSD 3 clause

from collections import deque

import networkx as nx

from ..diagram import relabel
from ..diagram._diagram import over_in, over_out, is_incoming
from ..diagram.regions import trace_faces
from ..diagram.surgery import _Merger
from ..utils.errors import (PatternMismatch, NonRealizable,
                            DisconnectedDiagram)

START = 'start'
END = 'end'


class _OpenMap(object):

    """A diagram with an open strand.

    The strand leaves the crossing map through the `start` label, whose
    head is a loose tip, and comes back through the `end` label, whose
    tail is a second loose tip. Tips are vertices of degree one for the
    face tracer. Crossings keep their ids; new crossings get fresh ones.

    Parameters
    ----------
    rows : dict
        Crossing id -> list of 4 edge labels.
    signs : dict
        Crossing id -> sign.
    free_loops : int
    start, end : int
        Labels of the two open ends; `end` is None once joined.
    over : bool
        Level of the strand in the crossings it adds.

    """
    def __init__(self, rows, signs, free_loops, start, end, over):
        self.rows = rows
        self.signs = signs
        self.free_loops = free_loops
        self.start = start
        self.end = end
        self.over = over
        labels = [v for x in rows.values() for v in x] + [start, end]
        self.next_label = max(v for v in labels if v is not None) + 1
        self.next_crossing = max(rows) + 1 if rows else 0
        self.added = []

    @classmethod
    def cut(cls, diagram, first, last, over=True):
        """Remove the strand piece running from edge `first` to edge
        `last` together with the crossings it passes.

        Every crossing passed strictly between the two edges must be
        passed over (`over` True) or under. With `first == last` the
        piece is the inside of a single edge and nothing is removed.
        """
        window = [first]
        e = first
        while e != last:
            e = diagram.next_edge(e)
            if e == first:
                raise PatternMismatch('Edge %d does not follow edge %d on'
                                      ' its component.' % (last, first))
            window.append(e)
        removed = []
        for e in window[:-1]:
            c, p = diagram.head(e)
            if (p != 0) != over:
                raise PatternMismatch('The strand from edge %d to edge %d'
                                      ' does not pass every crossing %s.'
                                      % (first, last,
                                         'over' if over else 'under'))
            removed.append(c)
        if (diagram.tail(first)[0] in removed or
                diagram.head(last)[0] in removed):
            raise PatternMismatch('The strand from edge %d to edge %d'
                                  ' passes one of its end crossings.'
                                  % (first, last))

        inside = set(window)
        m = _Merger()
        for c in removed:
            x = diagram.crossings[c]
            if over:
                m.union(x[0], x[2])
            else:
                sign = diagram.signs[c]
                m.union(x[over_in(sign)], x[over_out(sign)])
        rows, signs = {}, {}
        for c, x in enumerate(diagram.crossings):
            if c in removed:
                continue
            rows[c] = [v if v in inside else m.find(v) for v in x]
            signs[c] = diagram.signs[c]
        used = set(v for x in rows.values() for v in x)
        touched = set(m.find(v) for c in removed
                      for v in diagram.crossings[c] if v not in inside)
        end = last
        if first == last:
            end = max(diagram.edges) + 1
            c, p = diagram.head(last)
            rows[c][p] = end
        om = cls(rows, signs, diagram.free_loops + len(touched - used),
                 first, end, over)
        if not om.is_connected():
            raise DisconnectedDiagram('Cutting the strand from edge %d to'
                                      ' edge %d disconnects the diagram.'
                                      % (first, last))
        return om

    def copy(self):
        om = _OpenMap({c: list(x) for c, x in self.rows.items()},
                      dict(self.signs), self.free_loops, self.start,
                      self.end, self.over)
        om.next_label = self.next_label
        om.next_crossing = self.next_crossing
        om.added = list(self.added)
        return om

    # map structure -------------------------------------------------------

    def ends(self):
        """Label -> [tail dart, head dart]."""
        out = {}
        for c in sorted(self.rows):
            sign = self.signs[c]
            for p, v in enumerate(self.rows[c]):
                k = 1 if is_incoming(p, sign) else 0
                out.setdefault(v, [None, None])[k] = (c, p)
        if self.end is not None:
            out[self.start][1] = (START, 0)
            out[self.end][0] = (END, 0)
        return out

    def is_connected(self):
        g = nx.Graph()
        g.add_nodes_from(self.rows)
        for tail, head in self.ends().values():
            g.add_edge(tail[0], head[0])
        return nx.is_connected(g)

    def faces(self):
        """(faces, dart -> face id, label -> [tail dart, head dart])."""
        ends = self.ends()
        rotation = {}
        for c in sorted(self.rows):
            rotation[c] = [(c, p) for p in range(4)]
        if self.end is not None:
            rotation[START] = [(START, 0)]
            rotation[END] = [(END, 0)]
        twin = {}
        for tail, head in ends.values():
            twin[tail] = head
            twin[head] = tail
        faces = trace_faces(rotation, twin)
        index = {}
        for i, face in enumerate(faces):
            for dart in face:
                index[dart] = i
        return faces, index, ends

    def sides(self, label):
        """(left face, right face) of an edge."""
        _, index, ends = self.faces()
        tail, head = ends[label]
        return index[tail], index[head]

    def tip_faces(self):
        _, index, _ = self.faces()
        return index[(START, 0)], index[(END, 0)]

    def _adjacency(self):
        faces, index, ends = self.faces()
        adj = dict((i, []) for i in range(len(faces)))
        for label in sorted(ends):
            if label in (self.start, self.end):
                continue
            tail, head = ends[label]
            left, right = index[tail], index[head]
            if left == right:
                continue
            adj[left].append((right, label))
            adj[right].append((left, label))
        for i in adj:
            adj[i].sort()
        return adj, index[(START, 0)], index[(END, 0)]

    # routes --------------------------------------------------------------

    def shortest_route(self):
        """Fewest edges to cross from the start tip to the end tip.

        Returns
        ----------
        route : list of int
            Edge labels in crossing order; ties go to the lowest face id
            and then the lowest label.

        """
        adj, src, dst = self._adjacency()
        parent = {src: None}
        queue = deque([src])
        while queue:
            f = queue.popleft()
            if f == dst:
                break
            for g, label in adj[f]:
                if g not in parent:
                    parent[g] = (f, label)
                    queue.append(g)
        if dst not in parent:
            return None
        route = []
        f = dst
        while parent[f] is not None:
            f, label = parent[f]
            route.append(label)
        return route[::-1]

    def routes(self, max_length, min_length=0):
        """Routes from the start tip to the end tip through distinct
        faces, shortest first.

        When both tips share a face the route may return to it at the
        end, which includes the empty route.
        """
        adj, src, dst = self._adjacency()

        def extend(face, visited, labels, depth):
            if depth == 0:
                if face == dst:
                    yield list(labels)
                return
            for g, label in adj[face]:
                if label in labels:
                    continue
                closing = g == src == dst and depth == 1
                if g in visited and not closing:
                    continue
                fresh = g not in visited
                if fresh:
                    visited.add(g)
                labels.append(label)
                for route in extend(g, visited, labels, depth - 1):
                    yield route
                labels.pop()
                if fresh:
                    visited.discard(g)

        for length in range(min_length, max_length + 1):
            for route in extend(src, set([src]), [], length):
                yield route

    # drawing -------------------------------------------------------------

    def cross(self, label, over=None):
        """Extend the start tip across edge `label`.

        Returns
        ----------
        label : int
            The new label of the part of the crossed edge after the new
            crossing.

        """
        over = self.over if over is None else over
        _, index, ends = self.faces()
        here = index[(START, 0)]
        if label in (self.start, self.end) or label not in ends:
            raise NonRealizable('Edge %r cannot be crossed.' % (label,))
        tail, head = ends[label]
        left, right = index[tail], index[head]
        if here not in (left, right):
            raise NonRealizable('Edge %d does not bound the face of the'
                                ' open strand end.' % label)
        e, s = label, self.start
        e2, s2 = self.next_label, self.next_label + 1
        self.next_label += 2
        hc, hp = head
        self.rows[hc][hp] = e2
        if here == left:
            row, sign = ([e, s2, e2, s], 1) if over else ([s, e, s2, e2], -1)
        else:
            row, sign = ([e, s, e2, s2], -1) if over else ([s, e2, s2, e], 1)
        c = self.next_crossing
        self.next_crossing += 1
        self.rows[c] = row
        self.signs[c] = sign
        self.start = s2
        self.added.append(c)
        return e2

    def join(self):
        """Close the strand; both tips must lie in the same face."""
        _, index, ends = self.faces()
        if index[(START, 0)] != index[(END, 0)]:
            raise NonRealizable('The open strand ends lie in different'
                                ' faces.')
        hc, hp = ends[self.end][1]
        self.rows[hc][hp] = self.start
        self.end = None

    def to_diagram(self, check=True):
        if self.end is not None:
            raise ValueError('The strand is still open; call join() first.')
        keys = sorted(self.rows)
        return relabel([self.rows[c] for c in keys],
                       [self.signs[c] for c in keys], self.free_loops,
                       check=check)


def draw_route(om, route, over=None):
    """Cross the edges of `route` in order and close the strand."""
    for label in route:
        om.cross(label, over)
    om.join()
    return om.to_diagram()


def reroute(diagram, first, last, over, route):
    """Replace the strand piece from `first` to `last`, which passes all
    its crossings over (or under), by one crossing the edges of `route`
    on the same level.

    Parameters
    ----------
    diagram : Diagram
    first, last : int
        Edge labels bounding the piece.
    over : bool
    route : sequence of int
        Labels of the cut diagram, as returned by `_OpenMap.routes`.

    Returns
    ----------
    diagram : Diagram

    """
    om = _OpenMap.cut(diagram, first, last, over)
    return draw_route(om, list(route))
