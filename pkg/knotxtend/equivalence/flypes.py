# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Flypes at a crossing, the flyping degree of a ~-class and the
# twist-and-flype neighbourhood used to audit simplification.
# Author: knotxtend developers
#
# License: BSD 3 clause

import warnings
from collections import namedtuple
from itertools import combinations, product

import networkx as nx

from ..diagram import Diagram, relabel, canonical_code
from ..diagram._diagram import is_incoming
from ..diagram.surgery import crossing_graph, flip_crossings
from ..utils.checking import check_crossing
from .classes import equivalence_classes, is_mixed
from .twists import t2_twist, twist_sites

Flype = namedtuple('Flype', ['diagram', 'kind', 'tangle'])


def _tangles_at(diagram, x, k):
    """Tangles T attached to `x` through its positions k and k + 1.

    Yields (T, e_top, e_bot) where T is a crossing set whose other
    boundary edges are e_top (on the face above x) and e_bot (below).
    """
    X = diagram.crossings[x]
    near, far = X[k], X[(k + 1) % 4]
    c_near, _ = diagram.other_end(x, k)
    c_far, _ = diagram.other_end(x, (k + 1) % 4)
    if x in (c_near, c_far) or near == far:
        return
    index = diagram.face_index()
    faces = diagram.faces()
    above = set(diagram.crossings[c][p]
                for c, p in faces[index[(x, (k + 1) % 4)]])
    below = set(diagram.crossings[c][p]
                for c, p in faces[index[(x, (k + 3) % 4)]])
    free = [e for e in diagram.edges if e not in X]
    for e1, e2 in combinations(free, 2):
        g = crossing_graph(diagram, skip=(e1, e2))
        g.remove_node(x)
        tangle = nx.node_connected_component(g, c_near)
        if c_far not in tangle:
            continue
        boundary = set()
        for label in diagram.edges:
            (a, _), (b, _) = diagram.ends(label)
            if (a in tangle) != (b in tangle):
                boundary.add(label)
        if boundary != {near, far, e1, e2}:
            continue
        if len(tangle) + 1 >= diagram.num_crossings:
            continue
        top = [e for e in (e1, e2) if e in above and e not in below]
        bot = [e for e in (e1, e2) if e in below and e not in above]
        if len(top) != 1 or len(bot) != 1 or top == bot:
            continue
        yield frozenset(tangle), top[0], bot[0]


def _flype(diagram, x, k, tangle, e_top, e_bot):
    X = diagram.crossings[x]
    near, far = X[k], X[(k + 1) % 4]
    new_top, new_bot = max(diagram.edges) + 1, max(diagram.edges) + 2
    # the tangle turns over: its ends towards x join x's old neighbours,
    # its far ends meet x on the other side
    rename = {near: X[(k + 2) % 4], far: X[(k + 3) % 4],
              e_top: new_top, e_bot: new_bot}
    crossings = [list(row) for row in diagram.crossings]
    for c in tangle:
        crossings[c] = [rename.get(v, v) for v in crossings[c]]
    # x keeps its picture: slot i goes where position k + i was, up to a
    # half turn so that position 0 is an incoming under-strand
    slots = [e_bot, e_top, new_bot, new_top]
    bot_in = diagram.head(e_bot)[0] in tangle
    top_in = diagram.head(e_top)[0] in tangle
    flags = [bot_in, top_in, not bot_in, not top_in]
    q = k if flags[(-k) % 4] else (k + 2) % 4
    row = [None] * 4
    incoming = [None] * 4
    for i in range(4):
        row[(q + i) % 4] = slots[i]
        incoming[(q + i) % 4] = flags[i]
    crossings[x] = row
    signs = list(diagram.signs)
    signs[x] = 1 if incoming[3] else -1
    turned = flip_crossings(
        Diagram(crossings, signs, diagram.free_loops, check=False), tangle)
    return relabel(turned.crossings, turned.signs, turned.free_loops)


def flypes_at(diagram, x, nontrivial=True):
    """All diagrams reached by one flype that moves crossing `x` across
    an adjacent tangle.

    Parameters
    ----------
    diagram : Diagram
        Reduced knot diagram.
    x : int
        Crossing id. It keeps its id in the results.
    nontrivial : bool (default: True)
        Skip flypes whose tangle, or whose complementary tangle, lies
        in the twist class of `x`; those only reorder crossings of a
        twist.

    Returns
    ----------
    flypes : list of Flype
        Named tuples (diagram, kind, tangle). `kind` is 'A' when the two
        strands entering the tangle from `x` run the same way, else 'B'.

    """
    check_crossing(diagram, x)
    twist_class = None
    if nontrivial:
        for cls in equivalence_classes(diagram).twist:
            if x in cls:
                twist_class = set(cls)
    out = []
    seen = set()
    sign = diagram.signs[x]
    for k in range(4):
        kind = 'A' if is_incoming(k, sign) == \
            is_incoming((k + 1) % 4, sign) else 'B'
        for tangle, e_top, e_bot in _tangles_at(diagram, x, k):
            if twist_class is not None:
                rest = set(range(diagram.num_crossings)) - tangle - {x}
                if tangle <= twist_class or rest <= twist_class:
                    continue
            d = _flype(diagram, x, k, tangle, e_top, e_bot)
            if d in seen:
                continue
            seen.add(d)
            out.append(Flype(d, kind, tangle))
    return out


def _sides(diagram, c):
    """Position pairs of `c` joined by its Seifert smoothing."""
    if diagram.signs[c] > 0:
        return ({0, 1}, {2, 3})
    return ({1, 2}, {3, 0})


def _atoms(diagram, part, boundary):
    """Number of pieces `part` splits into along 2-edge cuts that leave
    each piece attached to one side of one class crossing."""
    inner = [label for label in diagram.edges
             if all(c in part for c, _ in diagram.ends(label))]
    count = 1
    for e1, e2 in combinations(inner, 2):
        g = nx.MultiGraph()
        g.add_nodes_from(part)
        for label in inner:
            if label in (e1, e2):
                continue
            (a, _), (b, _) = diagram.ends(label)
            g.add_edge(a, b)
        pieces = list(nx.connected_components(g))
        if len(pieces) != 2:
            continue
        ok = True
        for piece in pieces:
            ends = [(c, p) for c, p, owner in boundary if owner in piece]
            crossings = set(c for c, _ in ends)
            if len(ends) != 2 or len(crossings) != 1:
                ok = False
                break
            c = crossings.pop()
            if set(p for _, p in ends) not in _sides(diagram, c):
                ok = False
                break
        if ok:
            count += 1
    return count


def flyping_degree(diagram, cls):
    """Flyping degree of a ~-class: the number of essential tangles
    between its crossings.

    The tangles are the pieces of the diagram left after removing the
    crossings of the class, further cut along 2-edge cuts that separate
    them into consecutive tangles of the flyping circuit.

    Parameters
    ----------
    diagram : Diagram
    cls : iterable of int
        A ~-class of `diagram`.

    Returns
    ----------
    degree : int
        1 for an inactive class.

    """
    cls = sorted(set(cls))
    for c in cls:
        check_crossing(diagram, c)
    if is_mixed(diagram, cls):
        warnings.warn('The ~-class %r mixes crossing signs; its flyping'
                      ' degree follows the sign of each crossing.' % cls)
    g = crossing_graph(diagram)
    g.remove_nodes_from(cls)
    degree = 0
    for part in nx.connected_components(g):
        boundary = []
        for c in cls:
            for p in range(4):
                owner, _ = diagram.other_end(c, p)
                if owner in part:
                    boundary.append((c, p, owner))
        if len(boundary) != 4:
            warnings.warn('Tangle %r meets the class %r in %d edges.'
                          % (sorted(part), cls, len(boundary)))
        degree += _atoms(diagram, part, boundary)
    return max(degree, 1)


def _twist_bound(diagram, cls, degree):
    if degree <= 1:
        return 1 if len(cls) == 1 else 0
    if len(cls) >= degree:
        return 0
    return (degree - len(cls) + 2) // 2


def _has_trivial_clasp(diagram):
    return any(is_mixed(diagram, cls)
               for cls in equivalence_classes(diagram).sim)


def x_plus(diagram, flype_cap=200):
    """Diagrams from bounded twists at positive ~-classes followed by
    any number of type B flypes, without trivial clasps.

    The number of twists at the chosen crossing of a class is bounded by
    1 for inactive single crossing classes, 0 for other inactive classes
    and ceil((deg - size + 1) / 2) for active classes smaller than their
    degree.

    Parameters
    ----------
    diagram : Diagram
    flype_cap : int (default: 200)
        Stop the flype closure after this many diagrams.

    Returns
    ----------
    diagrams : list of Diagram

    """
    if not diagram.crossings:
        return [diagram]
    sites = twist_sites(diagram)
    bounds = [_twist_bound(diagram, cls, flyping_degree(diagram, cls))
              for _, cls in sites]
    seeds = []
    for choice in product(*[range(b + 1) for b in bounds]):
        d = diagram
        for (c, _), times in zip(sites, choice):
            for _ in range(times):
                d = t2_twist(d, c)
        seeds.append(d)
    found = {}
    stack = list(seeds)
    while stack:
        d = stack.pop()
        key = canonical_code(d)
        if key in found:
            continue
        if len(found) >= flype_cap:
            warnings.warn('Flype closure stopped at %d diagrams.'
                          % flype_cap)
            break
        found[key] = d
        for x in range(d.num_crossings):
            for f in flypes_at(d, x):
                if f.kind == 'B':
                    stack.append(f.diagram)
    return [d for d in found.values() if not _has_trivial_clasp(d)]
