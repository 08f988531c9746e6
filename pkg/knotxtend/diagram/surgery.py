# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Elementary diagram surgeries: smoothing, switching, mirrors,
# nugatory reduction and connected sums.
# Author: knotxtend developers
#
# License: BSD 3 clause

import networkx as nx

from ._diagram import Diagram, over_in, over_out
from ..utils.checking import check_crossing


class _Merger(object):
    """Union-find over edge labels."""

    def __init__(self):
        self.parent = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def remove_crossings(diagram, joins, check=True):
    """Delete crossings and splice their edge ends.

    Parameters
    ----------
    diagram : Diagram
    joins : dict
        Crossing id -> list of position pairs whose edges are merged.
    check : bool (default: True)

    Returns
    ----------
    diagram : Diagram
        Merged edge classes that no longer touch any crossing become
        free loops. Labels are renumbered from 0.

    """
    m = _Merger()
    for c, pairs in joins.items():
        x = diagram.crossings[c]
        for p, q in pairs:
            m.union(x[p], x[q])
    kept = [c for c in range(diagram.num_crossings) if c not in joins]
    used = set()
    crossings = []
    for c in kept:
        row = [m.find(v) for v in diagram.crossings[c]]
        used.update(row)
        crossings.append(row)
    touched = set(m.find(v) for c in joins for v in diagram.crossings[c])
    loops = len(touched - used)
    signs = [diagram.signs[c] for c in kept]
    return _renumber(crossings, signs, diagram.free_loops + loops, check)


def _renumber(crossings, signs, free_loops, check=True):
    mapping = {}
    for x in crossings:
        for v in x:
            mapping.setdefault(v, len(mapping))
    return Diagram([[mapping[v] for v in x] for x in crossings], signs,
                   free_loops=free_loops,
                   check=check)


def smooth_crossing(diagram, x):
    """Seifert smoothing of crossing `x` (the D0 of a skein triple).

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> smooth_crossing(parse_dt('4 6 2'), 0).num_components
    2

    """
    check_crossing(diagram, x)
    sign = diagram.signs[x]
    return remove_crossings(diagram,
                            {x: [(0, over_out(sign)), (over_in(sign), 2)]})


def _switched(x, sign):
    a, b, c, d = x
    if sign > 0:
        return (d, a, b, c), -1
    return (b, c, d, a), 1


def switch_crossing(diagram, x):
    """Exchange over and under at crossing `x`; its sign flips."""
    check_crossing(diagram, x)
    return switch_crossings(diagram, [x])


def switch_crossings(diagram, xs):
    xs = set(xs)
    crossings = list(diagram.crossings)
    signs = list(diagram.signs)
    for x in xs:
        check_crossing(diagram, x)
        crossings[x], signs[x] = _switched(crossings[x], signs[x])
    return Diagram(crossings, signs, diagram.free_loops, check=False)


def mirror(diagram):
    """Switch every crossing; the writhe is negated."""
    return switch_crossings(diagram, range(diagram.num_crossings))


def reverse(diagram):
    """Reverse the orientation of every component."""
    crossings = [(c, d, a, b) for a, b, c, d in diagram.crossings]
    return Diagram(crossings, diagram.signs, diagram.free_loops, check=False)


def reflect_crossings(diagram, xs):
    """Reflect the plane at the given crossings (reversed rotation, signs
    negated). Planar when `xs` is a union of connected-sum factors."""
    xs = set(xs)
    crossings = list(diagram.crossings)
    signs = list(diagram.signs)
    for x in xs:
        a, b, c, d = crossings[x]
        crossings[x] = (a, d, c, b)
        signs[x] = -signs[x]
    return Diagram(crossings, signs, diagram.free_loops)


def reflect(diagram):
    """Planar mirror image; the knot type is mirrored."""
    return reflect_crossings(diagram, range(diagram.num_crossings))


def flip_crossings(diagram, xs):
    """Turn the given crossings over (reflection plus switch); signs are
    kept."""
    xs = set(xs)
    crossings = list(diagram.crossings)
    for x in xs:
        a, b, c, d = crossings[x]
        if diagram.signs[x] > 0:
            crossings[x] = (d, c, b, a)
        else:
            crossings[x] = (b, a, d, c)
    return Diagram(crossings, diagram.signs, diagram.free_loops, check=False)


def flip(diagram):
    """Turn the whole diagram over; the link type is unchanged."""
    return flip_crossings(diagram, range(diagram.num_crossings))


def crossing_graph(diagram, skip=()):
    """Multigraph on crossings, one edge per diagram edge not in `skip`."""
    g = nx.MultiGraph()
    g.add_nodes_from(range(diagram.num_crossings))
    skip = set(skip)
    for label in diagram.edges:
        if label in skip:
            continue
        (c1, _), (c2, _) = diagram.ends(label)
        g.add_edge(c1, c2, key=label)
    return g


def _side(diagram, x, positions):
    """Crossings reachable from the ends at `positions` of `x` without
    passing through `x`."""
    seen = set()
    stack = []
    for p in positions:
        c, _ = diagram.other_end(x, p)
        if c != x:
            stack.append(c)
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        for p in range(4):
            c2, _ = diagram.other_end(c, p)
            if c2 != x and c2 not in seen:
                stack.append(c2)
    return seen


def nugatory_crossings(diagram):
    """Crossings with two opposite corners in the same region."""
    if not diagram.crossings:
        return []
    index = diagram.face_index()
    out = []
    for c in range(diagram.num_crossings):
        f = [index[(c, k)] for k in range(4)]
        if f[0] == f[2] or f[1] == f[3]:
            out.append(c)
    return out


def _untwist(diagram, x):
    index = diagram.face_index()
    f = [index[(x, k)] for k in range(4)]
    k = 0 if f[0] == f[2] else 1
    side = _side(diagram, x, [(k + 3) % 4, k % 4])
    flipped = flip_crossings(diagram, side) if side else diagram
    return remove_crossings(flipped, {x: [(0, 2), (1, 3)]})


def reduce_nugatory(diagram):
    """Remove nugatory crossings until none is left.

    Returns
    ----------
    (diagram, count) : (Diagram, int)

    Examples
    -----------
    >>> from knotxtend.diagram import parse_gauss
    >>> d, n = reduce_nugatory(parse_gauss('O1+U1+'))
    >>> d.num_crossings, n
    (0, 1)

    """
    count = 0
    while True:
        nug = nugatory_crossings(diagram)
        if not nug:
            return diagram, count
        diagram = _untwist(diagram, nug[0])
        count += 1


def connected_sum(a, b, edge_a=None, edge_b=None):
    """Band the diagrams together along edge `edge_a` of `a` and `edge_b`
    of `b` (default: their smallest labels), respecting orientation."""
    if not a.crossings:
        return Diagram(b.crossings, b.signs, b.free_loops + a.free_loops - 1,
                       check=False)
    if not b.crossings:
        return Diagram(a.crossings, a.signs, a.free_loops + b.free_loops - 1,
                       check=False)
    edge_a = a.edges[0] if edge_a is None else edge_a
    edge_b = b.edges[0] if edge_b is None else edge_b
    shift = max(a.edges) + 1
    ca = [list(x) for x in a.crossings]
    cb = [[v + shift for v in x] for x in b.crossings]
    hc, hp = a.head(edge_a)
    gc, gp = b.head(edge_b)
    # edge_a now runs into b; the shifted edge_b runs back into a
    ca[hc][hp] = edge_b + shift
    cb[gc][gp] = edge_a
    return _renumber(ca + cb, list(a.signs) + list(b.signs),
                     a.free_loops + b.free_loops)


def sum_cuts(diagram):
    """Pairs of edges whose removal splits the crossings in two.

    Returns
    ----------
    cuts : list of (e, f, side)
        `side` is the crossing set holding the head of `e`.

    """
    if diagram.num_crossings < 2:
        return []
    edges = diagram.edges
    out = []
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            g = crossing_graph(diagram, skip=(e, f))
            if nx.number_connected_components(g) != 2:
                continue
            side = nx.node_connected_component(g, diagram.head(e)[0])
            if diagram.tail(e)[0] in side:
                continue
            out.append((e, f, frozenset(side)))
    return out


def sum_parts(diagram):
    """Crossing sets of the connected-sum factors."""
    cuts = sum_cuts(diagram)
    groups = {}
    for c in range(diagram.num_crossings):
        key = tuple(c in side for _, _, side in cuts)
        groups.setdefault(key, []).append(c)
    return sorted(groups.values())


def _close_side(diagram, e, f, side):
    """Factor diagram of the crossings in `side` across the cut {e, f}."""
    rows = []
    signs = []
    for c in sorted(side):
        rows.append([e if v == f else v for v in diagram.crossings[c]])
        signs.append(diagram.signs[c])
    return _renumber(rows, signs, 0)


def connected_sum_split(diagram):
    """Factors of a connected diagram across its 2-edge cuts.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> t = parse_dt('4 6 2')
    >>> len(connected_sum_split(connected_sum(t, t)))
    2

    """
    if diagram.num_crossings < 2:
        return [diagram]
    cuts = sum_cuts(diagram)
    if not cuts:
        return [diagram]
    e, f, side = cuts[0]
    rest = frozenset(range(diagram.num_crossings)) - side
    return (connected_sum_split(_close_side(diagram, e, f, side)) +
            connected_sum_split(_close_side(diagram, e, f, rest)))


__all__ = ['smooth_crossing', 'switch_crossing', 'switch_crossings',
           'mirror', 'reverse', 'reflect', 'reflect_crossings', 'flip',
           'flip_crossings', 'remove_crossings', 'nugatory_crossings',
           'reduce_nugatory', 'connected_sum', 'connected_sum_split',
           'sum_cuts', 'sum_parts', 'crossing_graph']
