# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Exact convex hulls of rational points in the plane.
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction
from math import gcd


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Vertices of the convex hull in counterclockwise order.

    Monotone chain over exact rationals; collinear points on edges are
    dropped. Degenerate inputs return one or two points.

    Parameters
    ----------
    points : iterable of pairs
        Coordinates as int or Fraction.

    Returns
    ----------
    hull : list of (Fraction, Fraction)

    """
    pts = sorted(set((Fraction(x), Fraction(y)) for x, y in points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 1:
        return [pts[0], pts[-1]]
    return hull


def hull_edges(hull):
    """Consecutive vertex pairs of a hull, closing the polygon."""
    if len(hull) < 2:
        return []
    if len(hull) == 2:
        return [(hull[0], hull[1])]
    return [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]


def facet_inequalities(hull):
    """Inequalities a*x + b*y <= c describing a full-dimensional hull.

    Returns a list of (a, b, c) with integer-normalized coefficients.
    Lower dimensional hulls return their supporting equalities as pairs of
    opposite inequalities.
    """
    out = []
    for p, q in hull_edges(hull):
        a = q[1] - p[1]
        b = p[0] - q[0]
        c = a * p[0] + b * p[1]
        out.append(_normalize(a, b, c))
        if len(hull) == 2:
            out.append(_normalize(-a, -b, -c))
    return out


def _normalize(a, b, c):
    den = 1
    for v in (a, b, c):
        den = den * v.denominator // gcd(den, v.denominator)
    a, b, c = (int(v * den) for v in (a, b, c))
    g = gcd(gcd(abs(a), abs(b)), abs(c)) or 1
    return a // g, b // g, c // g
