# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction
from knotxtend.math import convex_hull, hull_edges, facet_inequalities


def test_square_with_interior_point():
    pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]
    assert convex_hull(pts) == [(0, 0), (2, 0), (2, 2), (0, 2)]
    assert len(hull_edges(convex_hull(pts))) == 4


def test_degenerate_hulls():
    assert convex_hull([(1, 1)]) == [(1, 1)]
    assert convex_hull([(0, 0), (1, 1), (2, 2)]) == [(0, 0), (2, 2)]
    assert hull_edges([(0, 0)]) == []


def test_rational_points():
    pts = [(Fraction(1, 2), 0), (0, Fraction(1, 3)), (0, 0)]
    assert len(convex_hull(pts)) == 3


def test_facets():
    hull = convex_hull([(0, 0), (2, 0), (2, 2), (0, 2)])
    facets = facet_inequalities(hull)
    assert (0, -1, 0) in facets
    assert (1, 0, 2) in facets
    for a, b, c in facets:
        assert a * 1 + b * 1 <= c
