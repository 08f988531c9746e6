# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Log-concavity of the Alexander polynomials of a whole twist series,
# decided on the convex hull of coefficient ratio points.
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction
from math import gcd

from .._base import Certificate, PASS, FAIL, INAPPLICABLE
from ..equivalence import t2_twist
from ..math import LaurentPoly, convex_hull, hull_edges
from .coefficients import alternates, logconcavity_test
from .series import series_decomposition

_MODES = ('exact', 'fast')


def _ratio_point(poly, k):
    c = poly.coefficients()
    return (Fraction(c[k], c[0]), Fraction(c[k + 1], c[0]))


def _from_ratios(ratios):
    """Integral polynomial with coefficients proportional to `ratios`."""
    den = 1
    for r in ratios:
        den = den * r.denominator // gcd(den, r.denominator)
    return LaurentPoly.from_coefficients([int(r * den) for r in ratios])


def reduce_candidates(polys, mode='exact'):
    """Drop reduced polynomials whose combinations are covered by others.

    Degree 0 keeps the constant 1, degree 2 the polynomials of minimal
    and maximal ratio [1]/[0], degree 4 the polynomials spanning the
    convex hull of the points ([1]/[0], [2]/[0]). Mode 'fast' replaces
    the degree 4 polynomials by the four corners of the bounding box of
    their points. Higher degrees are kept.

    Parameters
    ----------
    polys : list of LaurentPoly
        Reduced polynomials with min-degree 0 and constant term > 0.
    mode : {'exact', 'fast'} (default: 'exact')

    Returns
    ----------
    kept : list of LaurentPoly

    """
    if mode not in _MODES:
        raise ValueError('Unknown mode %r. Choose one of %s'
                         % (mode, ', '.join(_MODES)))
    by_degree = {}
    for p in polys:
        by_degree.setdefault(int(p.maxdeg), []).append(p)
    kept = []
    for deg in sorted(by_degree):
        group = by_degree[deg]
        if deg == 0:
            kept.append(LaurentPoly.one())
        elif deg == 2:
            ratios = [Fraction(p.coeff(1), p.coeff(0)) for p in group]
            lo = group[ratios.index(min(ratios))]
            hi = group[ratios.index(max(ratios))]
            kept.extend([lo] if lo == hi else [lo, hi])
        elif deg == 4 and mode == 'fast':
            points = [_ratio_point(p, 1) for p in group]
            xs = [x for x, _ in points]
            ys = [y for _, y in points]
            corners = set((x, y) for x in (min(xs), max(xs))
                          for y in (min(ys), max(ys)))
            kept.extend(_from_ratios([Fraction(1), x, y, x, Fraction(1)])
                        for x, y in sorted(corners))
        elif deg == 4:
            points = [_ratio_point(p, 1) for p in group]
            vertices = convex_hull(points)
            for v in vertices:
                kept.append(group[points.index(v)])
        else:
            kept.extend(group)
    return kept


def _edge_minimum(p, q):
    """Minimum of x^2 - y on the segment from p to q."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    a = dx * dx
    b = 2 * p[0] * dx - dy
    c = p[0] * p[0] - p[1]
    values = [c, a + b + c]
    if a > 0:
        s = -b / (2 * a)
        if 0 < s < 1:
            values.append(a * s * s + b * s + c)
    return min(values)


def hull_in_region(points):
    """Decide whether conv(points) lies in {x >= 0, y <= x^2}.

    Returns
    ----------
    (inside, hull, violations) : (bool, list, list)
        `violations` lists the offending vertices and edges with the
        minimum of x^2 - y found on them.

    """
    hull = convex_hull(points)
    violations = []
    for v in hull:
        if v[0] < 0:
            violations.append({'vertex': list(v)})
    segments = hull_edges(hull) if len(hull) > 1 else [(hull[0], hull[0])]
    for p, q in segments:
        low = _edge_minimum(p, q)
        if low < 0:
            violations.append({'edge': [list(p), list(q)], 'min': low})
    return not violations, hull, violations


def series_logconcavity_certify(diagram, depth=2, mode='exact', cap=20,
                                require_generating=True):
    """Certify log-concavity of Delta on the whole twist series.

    Every member's polynomial is a nonnegative combination of the
    polynomials Delta_i = (1 - t)^n_i Delta~_i. Each Delta_i is checked
    directly. For m = 1..g-1 the points

        (X_i[m] / X_i[m-1], X_i[m+1] / X_i[m-1])

    of absolute coefficients must span a hull inside
    R = {x >= 0, y <= x^2}. A generator failing this is irregular: its
    own polynomial is tested and the test is repeated on the diagrams
    twisted once at each ~-class.

    Parameters
    ----------
    diagram : Diagram
        Alternating generating knot diagram.
    depth : int (default: 2)
        Maximal number of refinement twists.
    mode : {'exact', 'fast'} (default: 'exact')
        See `reduce_candidates`.
    cap : int (default: 20)
        Crossing cap of the skein polynomial.

    Returns
    ----------
    certificate : Certificate

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> series_logconcavity_certify(parse_dt('4 6 8 2')).verdict
    'PASS'

    """
    sd = series_decomposition(diagram, check=0, cap=cap,
                              require_generating=require_generating)
    g = sd.genus
    kept = reduce_candidates(sd.reduced, mode)
    one_minus_t = LaurentPoly({0: 1, 1: -1})
    polys = [one_minus_t ** (2 * g - int(p.maxdeg)) * p for p in kept]
    witnesses = {'genus': g, 'reduced': len(sd.reduced), 'kept': len(kept),
                 'mode': mode}
    provenance = ['%d of %d reduced polynomials kept'
                  % (len(kept), len(sd.reduced))]
    X = []
    for p in polys:
        c = p.coefficients()
        if not alternates(c):
            return Certificate('series_logconcavity', INAPPLICABLE,
                               dict(witnesses, polynomial=str(p)),
                               provenance + ['coefficient signs of %s do not'
                                             ' alternate' % p])
        X.append([abs(v) for v in c])

    irregular = []
    for i, x in enumerate(X):
        for k in range(1, g + 1):
            if x[k] ** 2 < x[k - 1] * x[k + 1]:
                irregular.append({'polynomial': i, 'k': k})
    hulls = []
    for m in range(1, g):
        points = [(Fraction(x[m], x[m - 1]), Fraction(x[m + 1], x[m - 1]))
                  for x in X]
        inside, hull, violations = hull_in_region(points)
        hulls.append(len(hull))
        if not inside:
            irregular.append({'m': m, 'violations': violations})
    witnesses['hull_sizes'] = hulls
    if not irregular:
        provenance.append('all hulls lie in {x >= 0, y <= x^2}')
        return Certificate('series_logconcavity', PASS, witnesses,
                           provenance)
    return _refine(sd, depth, mode, cap, witnesses, provenance, irregular)


def _refine(sd, depth, mode, cap, witnesses, provenance, irregular):
    witnesses['irregular'] = irregular
    provenance.append('irregular at %d checks' % len(irregular))
    own = logconcavity_test(sd.frame_polynomial())
    if own.verdict == FAIL:
        witnesses['generator'] = own.witnesses
        provenance.append('the generator polynomial is not log-concave')
        return Certificate('series_logconcavity', FAIL, witnesses,
                           provenance)
    if depth <= 0:
        provenance.append('refinement depth exhausted')
        return Certificate('series_logconcavity', INAPPLICABLE, witnesses,
                           provenance)
    verdicts = []
    for cls in sd.classes:
        twisted = t2_twist(sd.generator, cls[0])
        sub = series_logconcavity_certify(twisted, depth - 1, mode, cap,
                                          require_generating=False)
        verdicts.append(sub.verdict)
        provenance.append('twist at crossing %d: %s' % (cls[0], sub.verdict))
    witnesses['refined'] = verdicts
    if all(v == PASS for v in verdicts):
        return Certificate('series_logconcavity', PASS, witnesses,
                           provenance)
    verdict = FAIL if FAIL in verdicts else INAPPLICABLE
    return Certificate('series_logconcavity', verdict, witnesses,
                       provenance)
