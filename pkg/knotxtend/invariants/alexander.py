# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Alexander and Conway polynomials, determinant and v2.
# Author: knotxtend developers
#
# License: BSD 3 clause

import sympy

from ..diagram._diagram import over_in, over_out
from ..diagram.surgery import _Merger
from ..math import LaurentPoly, conway_at_2i, polynomial_det
from ..utils.checking import check_knot
from .skein import skein_polynomial

_METHODS = ('matrix', 'region', 'skein')


def arcs(diagram):
    """Map edge label -> over-arc id; an arc runs between two under-passes.
    """
    m = _Merger()
    for c, x in enumerate(diagram.crossings):
        sign = diagram.signs[c]
        m.union(x[over_in(sign)], x[over_out(sign)])
    roots = sorted(set(m.find(e) for e in diagram.edges))
    ids = {r: i for i, r in enumerate(roots)}
    return {e: ids[m.find(e)] for e in diagram.edges}


def fox_matrix(diagram, t):
    """Abelianized Fox derivatives of the Wirtinger relations.

    One row per crossing and one column per arc. The over-arc gets 1 - t;
    the incoming and outgoing under-arcs get t and -1 at a positive
    crossing and -1 and t at a negative one.
    """
    arc = arcs(diagram)
    n = len(set(arc.values()))
    rows = []
    for c, x in enumerate(diagram.crossings):
        row = [sympy.Integer(0)] * n
        sign = diagram.signs[c]
        k, i, j = arc[x[over_in(sign)]], arc[x[0]], arc[x[2]]
        row[k] += 1 - t
        if sign > 0:
            row[i] += t
            row[j] += -1
        else:
            row[i] += -1
            row[j] += t
        rows.append(row)
    return rows


def region_matrix(diagram, t):
    """Alexander's crossing-by-region matrix.

    One row per crossing and one column per face. Of the four corners of
    a crossing, the one left of both strands gets 1 and the one right of
    both gets t; the other corner left of the under-strand gets -t and
    the last one -1.
    """
    index = diagram.face_index()
    n = len(diagram.faces())
    rows = []
    for c in range(diagram.num_crossings):
        row = [sympy.Integer(0)] * n
        # corners 0..3 lie between positions k and k + 1
        values = (t, -1, 1, -t) if diagram.signs[c] > 0 else (-1, t, -t, 1)
        for k, v in enumerate(values):
            row[index[(c, k)]] += v
        rows.append(row)
    return rows


def normalize_alexander(poly):
    """Center a Laurent polynomial at degree 0 and make its value at 1
    positive."""
    if poly.is_zero():
        return poly
    poly = poly.symmetrize()
    if poly.evaluate(1) < 0:
        poly = -poly
    return poly


def _minor_to_alexander(minor, t):
    det = sympy.expand(polynomial_det(minor, t))
    coeffs = [int(c) for c in sympy.Poly(det, t).all_coeffs()]
    return normalize_alexander(
        LaurentPoly.from_coefficients(coeffs[::-1]))


def _alexander_matrix(diagram):
    check_knot(diagram, 'The Alexander matrix')
    if not diagram.crossings:
        return LaurentPoly.one()
    t = sympy.Symbol('t')
    rows = fox_matrix(diagram, t)
    return _minor_to_alexander([row[1:] for row in rows[1:]], t)


def _alexander_regions(diagram):
    check_knot(diagram, 'The region matrix')
    if not diagram.crossings:
        return LaurentPoly.one()
    t = sympy.Symbol('t')
    index = diagram.face_index()
    for e in diagram.edges:
        drop = set([diagram.left_face(e, index),
                    diagram.right_face(e, index)])
        if len(drop) == 2:
            break
    rows = region_matrix(diagram, t)
    return _minor_to_alexander([[v for j, v in enumerate(row)
                                 if j not in drop] for row in rows], t)


_MATRIX_METHODS = {'matrix': _alexander_matrix,
                   'region': _alexander_regions}


def _resolve(method, diagram):
    if method is None:
        return 'matrix' if diagram.num_components == 1 else 'skein'
    if method not in _METHODS:
        raise ValueError('Unknown method %r. Choose one of %s'
                         % (method, ', '.join(_METHODS)))
    return method


def alexander(diagram, method=None, cap=20):
    """Conway-normalized Alexander polynomial, Delta(t) = Delta(1/t).

    Parameters
    ----------
    diagram : Diagram
    method : {None, 'matrix', 'region', 'skein'} (default: None)
        'matrix' takes a minor of the Fox matrix (knots only, no cap);
        'region' drops two adjacent faces from Alexander's region matrix
        (knots only, no cap);
        'skein' substitutes into the skein polynomial. None picks
        'matrix' for knots and 'skein' for links.
    cap : int (default: 20)
        Crossing cap of the skein method.

    Returns
    ----------
    delta : LaurentPoly

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> str(alexander(parse_dt('4 6 8 2')))
    '-1*t^-1 + 3*t^0 + -1*t^1'

    """
    method = _resolve(method, diagram)
    if method in _MATRIX_METHODS:
        return _MATRIX_METHODS[method](diagram)
    return skein_polynomial(diagram, cap=cap).to_alexander()


def alexander_to_conway(delta):
    """Invert Delta(t) = nabla(t^(1/2) - t^(-1/2)) for knots."""
    z2 = LaurentPoly({1: 1, 0: -2, -1: 1})
    rem = delta
    terms = {}
    while not rem.is_zero():
        k = rem.maxdeg
        if k < 0 or int(k) != k:
            raise ValueError('%s is not a symmetric knot Alexander'
                             ' polynomial.' % delta)
        coeff = rem.coeff(k)
        terms[2 * int(k)] = coeff
        rem = rem - z2 ** int(k) * coeff
    return LaurentPoly(terms, var='z')


def conway(diagram, method=None, cap=20):
    """Conway polynomial nabla(z); see `alexander` for `method`."""
    method = _resolve(method, diagram)
    if method in _MATRIX_METHODS:
        return alexander_to_conway(_MATRIX_METHODS[method](diagram))
    return skein_polynomial(diagram, cap=cap).to_conway()


def determinant(diagram, method=None, cap=20):
    """|Delta(-1)|, computed as |nabla(2i)|.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> determinant(parse_dt('4 6 2'))
    3

    """
    re, im = conway_at_2i(conway(diagram, method=method, cap=cap))
    return abs(re) + abs(im)


def v2(diagram, method=None, cap=20):
    """Second coefficient of the Conway polynomial, 1/2 Delta''(1)."""
    check_knot(diagram, 'v2')
    return conway(diagram, method=method, cap=cap).coeff(2)
