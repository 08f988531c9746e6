# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Reidemeister moves and random unknot diagrams built from them.
# Author: knotxtend developers
#
# License: BSD 3 clause

from collections import namedtuple

import numpy as np

from ..diagram import Diagram, relabel, remove_crossings, canonical_code
from ..utils.checking import check_crossing
from ..utils.errors import KnotxtendError, PatternMismatch, NonRealizable
from ._routing import _OpenMap, draw_route

Move = namedtuple('Move', ['kind', 'params', 'diagram'])

_STRANDS = [(0, 2), (1, 3)]


def _kink_sites(diagram):
    out = []
    for c, x in enumerate(diagram.crossings):
        if any(x[p] == x[(p + 1) % 4] for p in range(4)):
            out.append(c)
    return out


def r1_minus(diagram, x):
    """Remove the curl at crossing `x`.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_gauss
    >>> r1_minus(parse_gauss('O1+U1+'), 0).num_crossings
    0

    """
    check_crossing(diagram, x)
    if x not in _kink_sites(diagram):
        raise PatternMismatch('Crossing %d is not a curl.' % x)
    return remove_crossings(diagram, {x: _STRANDS})


def _bigons(diagram):
    """Crossing pairs bounding a 2-gon over which one strand passes over
    at both corners and the other under."""
    out = set()
    for face in diagram.faces():
        if len(face) != 2:
            continue
        (c1, p1), (c2, p2) = face
        if c1 == c2:
            continue
        _, q1 = diagram.other_end(c1, p1)
        _, q2 = diagram.other_end(c2, p2)
        if p1 % 2 == q1 % 2 and p2 % 2 == q2 % 2 and p1 % 2 != p2 % 2:
            out.add((min(c1, c2), max(c1, c2)))
    return sorted(out)


def r2_minus(diagram, crossings):
    """Remove the two crossings of a bigon."""
    pair = tuple(sorted(crossings))
    if pair not in _bigons(diagram):
        raise PatternMismatch('Crossings %r do not bound a removable'
                              ' bigon.' % (pair,))
    return remove_crossings(diagram, {pair[0]: _STRANDS,
                                      pair[1]: _STRANDS})


def _r3_sites(diagram):
    """(first, last, third crossing) of the strands passing over two
    corners of a triangle."""
    out = []
    for face in diagram.faces():
        cs = set(c for c, _ in face)
        if len(face) != 3 or len(cs) != 3:
            continue
        for c, p in face:
            c2, p2 = diagram.other_end(c, p)
            if p % 2 == 0 or p2 % 2 == 0:
                continue
            top = diagram.crossings[c][p]
            tc, tp = diagram.tail(top)
            first = diagram.crossings[tc][(tp + 2) % 4]
            last = diagram.next_edge(top)
            third, = cs - set([c, c2])
            out.append((first, last, third))
    return out


def r3_moves(diagram):
    """Triangle moves, realized by pushing the top strand of a triangle
    across the opposite crossing.

    Returns
    ----------
    moves : list of Move
        Parameters hold the rerouted piece and its route.

    """
    start = canonical_code(diagram)
    seen = set()
    out = []
    for first, last, third in _r3_sites(diagram):
        try:
            om = _OpenMap.cut(diagram, first, last, True)
        except KnotxtendError:
            continue
        if third not in om.rows:
            continue
        for route in om.routes(2, min_length=2):
            if not all(label in om.rows[third] for label in route):
                continue
            try:
                out_d = draw_route(om.copy(), route)
            except KnotxtendError:
                continue
            code = canonical_code(out_d)
            if code == start or code in seen:
                continue
            seen.add(code)
            out.append(Move('r3', {'first': first, 'last': last,
                                   'over': True, 'route': list(route)},
                            out_d))
    return out


def r1_plus(diagram, label=None, sign=1, over_first=False):
    """Add a curl on edge `label`, or on a crossingless component when
    `label` is None.

    Parameters
    ----------
    diagram : Diagram
    label : int (default: None)
    sign : {1, -1} (default: 1)
        Sign of the new crossing.
    over_first : bool (default: False)
        The strand meets the new crossing on the over-strand first.

    """
    labels = diagram.edges
    top = max(labels) + 1 if labels else 0
    rows = [list(x) for x in diagram.crossings]
    free_loops = diagram.free_loops
    if label is None:
        if not free_loops:
            raise PatternMismatch('The diagram has no crossingless'
                                  ' component.')
        a, a2, loop = top, top, top + 1
        free_loops -= 1
    else:
        if label not in labels:
            raise PatternMismatch('Edge %r does not exist.' % (label,))
        a, a2, loop = label, top, top + 1
        c, p = diagram.head(label)
        rows[c][p] = a2
    if over_first:
        row = [loop, loop, a2, a] if sign > 0 else [loop, a, a2, loop]
    else:
        row = [a, a2, loop, loop] if sign > 0 else [a, loop, loop, a2]
    rows.append(row)
    signs = list(diagram.signs) + [1 if sign > 0 else -1]
    return relabel(rows, signs, free_loops)


def r2_plus(diagram, a, b, over=True):
    """Push a finger of edge `a` across edge `b`, over or under it.

    The edges must share a face once `a` is cut open.

    Returns
    ----------
    diagram : Diagram
        Two crossings more, of opposite signs.

    """
    if a == b:
        raise PatternMismatch('A finger of edge %d cannot cross itself.'
                              % a)
    om = _OpenMap.cut(diagram, a, a, over)
    left, right = om.sides(b)
    here, _ = om.tip_faces()
    if left == right or here not in (left, right):
        raise NonRealizable('Edges %d and %d do not share a face.'
                            % (a, b))
    b2 = om.cross(b)
    for piece in (b, b2):
        trial = om.copy()
        try:
            trial.cross(piece)
            trial.join()
        except NonRealizable:
            continue
        return trial.to_diagram()
    raise NonRealizable('No finger of edge %d across edge %d closes up.'
                        % (a, b))


def _face_pairs(diagram):
    pairs = set()
    for face in diagram.faces():
        labels = sorted(set(diagram.crossings[c][p] for c, p in face))
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                pairs.add((a, b))
    return sorted(pairs)


def reidemeister_moves(diagram, expand=False):
    """Applicable Reidemeister moves and their results.

    Parameters
    ----------
    diagram : Diagram
    expand : bool (default: False)
        Also list the curl and finger insertions.

    Returns
    ----------
    moves : list of Move

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> reidemeister_moves(parse_dt('4 6 2'))
    []

    """
    out = []
    for x in _kink_sites(diagram):
        out.append(Move('r1-', {'crossing': x}, r1_minus(diagram, x)))
    for pair in _bigons(diagram):
        out.append(Move('r2-', {'crossings': list(pair)},
                        r2_minus(diagram, pair)))
    out.extend(r3_moves(diagram))
    if not expand:
        return out
    targets = diagram.edges or [None]
    for label in targets:
        for sign in (1, -1):
            for over_first in (False, True):
                params = {'edge': label, 'sign': sign,
                          'over_first': over_first}
                out.append(Move('r1+', params,
                                r1_plus(diagram, label, sign, over_first)))
    for a, b in _face_pairs(diagram):
        for first, second in ((a, b), (b, a)):
            for over in (True, False):
                try:
                    d = r2_plus(diagram, first, second, over)
                except KnotxtendError:
                    continue
                out.append(Move('r2+', {'a': first, 'b': second,
                                        'over': over}, d))
    return out


def random_unknot(max_crossings, seed=None, max_negative=None,
                  max_tries=None):
    """Unknot diagram grown by random curl, finger and triangle moves.

    Parameters
    ----------
    max_crossings : int
        Target crossing number; growth stops once it is reached.
    seed : int (default: None)
    max_negative : int (default: None)
        Reject moves leaving more negative crossings than this.
    max_tries : int (default: None)
        Number of attempted moves; None uses 20 * max_crossings.

    Returns
    ----------
    diagram : Diagram

    """
    rng = np.random.RandomState(seed)
    d = Diagram([], [], free_loops=1)
    tries = 20 * max_crossings if max_tries is None else max_tries
    for _ in range(tries):
        if d.num_crossings >= max_crossings:
            break
        kind = rng.randint(3) if d.crossings else 0
        try:
            if kind == 0:
                label = d.edges[rng.randint(len(d.edges))] \
                    if d.crossings else None
                sign = 1 if rng.randint(2) else -1
                cand = r1_plus(d, label, sign, bool(rng.randint(2)))
            elif kind == 1:
                pairs = _face_pairs(d)
                a, b = pairs[rng.randint(len(pairs))]
                if rng.randint(2):
                    a, b = b, a
                cand = r2_plus(d, a, b, bool(rng.randint(2)))
            else:
                moves = r3_moves(d)
                if not moves:
                    continue
                cand = moves[rng.randint(len(moves))].diagram
        except KnotxtendError:
            continue
        if cand.num_crossings > max_crossings:
            continue
        if max_negative is not None and cand.c_minus > max_negative:
            continue
        d = cand
    return d
