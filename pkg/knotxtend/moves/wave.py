# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Wave moves: rerouting a bridge or tunnel along another path on the
# same level, and the rational tangle move as a special case.
# Author: knotxtend developers
#
# License: BSD 3 clause

from collections import namedtuple

from ..diagram import nugatory_crossings
from ..diagram.surgery import _untwist
from ..utils.errors import KnotxtendError, PatternMismatch
from ._routing import _OpenMap, draw_route
from .bridges import find_bridges
from .trace import MoveTrace

WaveMove = namedtuple('WaveMove', ['first', 'last', 'over', 'length',
                                   'route', 'diagram'])


def _open(diagram, first, last, over):
    try:
        return _OpenMap.cut(diagram, first, last, over)
    except KnotxtendError:
        return None


def _params(first, last, over, route):
    return {'first': first, 'last': last, 'over': over,
            'route': list(route)}


def _sign_ok(before, after):
    return (after.c_plus <= before.c_plus and
            after.c_minus <= before.c_minus)


def reducing_wave_move(diagram, sign_monotone=False):
    """Apply one crossing number reducing wave move.

    A nugatory crossing is removed first (the (1, 0)-pass). Otherwise
    the bridges and tunnels are scanned in the order of `find_bridges`,
    longer pieces first, and the first piece whose ends are joined by a
    shorter route in the diagram without it is rerouted.

    Parameters
    ----------
    diagram : Diagram
    sign_monotone : bool (default: False)
        Only accept moves that increase neither c_plus nor c_minus.

    Returns
    ----------
    result : (Diagram, MoveTrace) or None

    Examples
    -----------
    >>> from knotxtend.diagram import parse_gauss
    >>> d, trace = reducing_wave_move(parse_gauss('O1+U1+'))
    >>> d.num_crossings, trace.kinds()
    (0, ['nugatory'])

    """
    trace = MoveTrace()
    nugatory = nugatory_crossings(diagram)
    if nugatory:
        out = _untwist(diagram, nugatory[0])
        trace.add('nugatory', {'crossing': nugatory[0]}, diagram, out)
        return out, trace
    for bridge in find_bridges(diagram):
        for first, last, length in bridge.windows():
            om = _open(diagram, first, last, bridge.over)
            if om is None:
                continue
            route = om.shortest_route()
            if route is None or len(route) >= length:
                continue
            try:
                out = draw_route(om, route)
            except KnotxtendError:
                continue
            if sign_monotone and not _sign_ok(diagram, out):
                continue
            trace.add('wave', _params(first, last, bridge.over, route),
                      diagram, out)
            return out, trace
    return None


def wave_moves(diagram, max_length=None):
    """All wave moves, reducing, preserving and lengthening.

    Parameters
    ----------
    diagram : Diagram
    max_length : int (default: None)
        Longest route tried; None uses the length of each piece.

    Yields
    ----------
    move : WaveMove

    """
    for bridge in find_bridges(diagram):
        for first, last, length in bridge.windows():
            om = _open(diagram, first, last, bridge.over)
            if om is None:
                continue
            limit = length if max_length is None else max_length
            for route in om.routes(limit):
                try:
                    out = draw_route(om.copy(), route)
                except KnotxtendError:
                    continue
                yield WaveMove(first, last, bridge.over, length, route, out)


def rational_tangle_move(diagram, site):
    """Reroute a piece over two crossings across a single edge.

    Parameters
    ----------
    diagram : Diagram
    site : (int, int)
        First and last edge of a bridge or tunnel piece of length 2
        whose ends are one edge apart once it is removed.

    Returns
    ----------
    diagram : Diagram
        One crossing less.

    """
    first, last = site
    if first not in diagram.edges or last not in diagram.edges:
        raise PatternMismatch('Unknown edges %r.' % (site,))
    over = diagram.head(first)[1] != 0
    try:
        om = _OpenMap.cut(diagram, first, last, over)
    except PatternMismatch:
        raise
    except KnotxtendError as err:
        raise PatternMismatch('No rational tangle at %r: %s' % (site, err))
    length = len(diagram.crossings) - len(om.rows)
    if length != 2:
        raise PatternMismatch('The piece from edge %d to edge %d passes %d'
                              ' crossings, expected 2.'
                              % (first, last, length))
    route = om.shortest_route()
    if route is None or len(route) != 1:
        raise PatternMismatch('The piece from edge %d to edge %d does not'
                              ' reroute across a single edge.'
                              % (first, last))
    return draw_route(om, route)


def rational_sites(diagram):
    """Sites where `rational_tangle_move` applies."""
    out = []
    for bridge in find_bridges(diagram):
        for first, last, length in bridge.windows(min_length=2):
            if length != 2:
                continue
            try:
                rational_tangle_move(diagram, (first, last))
            except KnotxtendError:
                continue
            out.append((first, last))
    return out
