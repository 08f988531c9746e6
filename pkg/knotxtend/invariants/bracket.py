# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Kauffman bracket by a boundary-matching state sum and the Jones
# polynomial.
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

from ..math import LaurentPoly
from ..utils.checking import check_size

# Splices in terms of crossing positions. Rotating the over-strand
# (positions 1 and 3) counterclockwise sweeps the corners 1 and 3, so the
# A-splice joins them and leaves arcs around corners 0 and 2.
A_SPLICE = ((0, 1), (2, 3))
B_SPLICE = ((1, 2), (3, 0))


def loop_value():
    """d = -A^2 - A^-2, the value of a crossingless circle."""
    return LaurentPoly({2: -1, -2: -1}, var='A')


def _join(match, a, b):
    """Add the arc a-b to a matching of open edge ends. Returns 1 when the
    arc closes a loop."""
    if a == b:
        return 1
    if a in match:
        a2 = match.pop(a)
        del match[a2]
        if a2 == b:
            return 1
        a = a2
    if b in match:
        b2 = match.pop(b)
        del match[b2]
        if b2 == a:
            return 1
        b = b2
    match[a] = b
    match[b] = a
    return 0


def _crossing_order(diagram):
    """Greedy order keeping the number of open edge ends small."""
    n = diagram.num_crossings
    done = []
    open_count = {}
    left = set(range(n))
    while left:
        best = max(left, key=lambda c: (sum(open_count.get(v, 0)
                                            for v in diagram.crossings[c]),
                                        -c))
        left.remove(best)
        done.append(best)
        for v in diagram.crossings[best]:
            open_count[v] = open_count.get(v, 0) + 1
    return done


def kauffman_bracket(diagram, cap=24):
    """Kauffman bracket <D> in the variable A.

    Parameters
    ----------
    diagram : Diagram
    cap : int (default: 24)
        Largest crossing number accepted. None disables the check.

    Returns
    ----------
    bracket : LaurentPoly
        Normalized to 1 on the crossingless circle.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_gauss
    >>> str(kauffman_bracket(parse_gauss('O1+U1+')))
    '-1*A^3'

    """
    check_size(diagram, cap, 'The Kauffman bracket')
    d = loop_value()
    if not diagram.crossings:
        return d ** (diagram.free_loops - 1)
    # matching of open edge ends -> {A-exponent: coefficient}
    states = {frozenset(): {0: 1}}
    for c in _crossing_order(diagram):
        x = diagram.crossings[c]
        nxt = {}
        for key, poly in states.items():
            for shift, splice in ((1, A_SPLICE), (-1, B_SPLICE)):
                match = dict(key)
                loops = sum(_join(match, x[p], x[q]) for p, q in splice)
                term = LaurentPoly({e + shift: v for e, v in poly.items()},
                                   var='A')
                if loops:
                    term = term * d ** loops
                k = frozenset(match.items())
                acc = nxt.get(k)
                nxt[k] = _add_terms(acc, term)
        states = nxt
    total = LaurentPoly(var='A')
    for poly in states.values():
        total = total + LaurentPoly(poly, var='A')
    return total.exact_div(d) * d ** diagram.free_loops


def _add_terms(acc, poly):
    out = {} if acc is None else acc
    for e, v in poly.terms():
        w = out.get(e, 0) + v
        if w:
            out[e] = w
        else:
            out.pop(e, None)
    return out


def jones(diagram, cap=24):
    """Jones polynomial V(t) = (-A^3)^(-w) <D> at A = t^(-1/4).

    Returns
    ----------
    jones : LaurentPoly
        In t; half-integer exponents occur for links with an even
        number of components.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> str(jones(parse_dt('4 6 2')))
    '1*t^1 + 1*t^3 + -1*t^4'

    """
    f = kauffman_bracket(diagram, cap=cap)
    w = diagram.writhe
    f = f * LaurentPoly({-3 * w: (-1) ** (w % 2)}, var='A')
    return f.substitute(Fraction(-1, 4), var='t')
