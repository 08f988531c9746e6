# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Bounds on the number of ~-classes and on generator crossing numbers.
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

from .._base import Certificate, checks_certificate, INAPPLICABLE
from ..diagram import seifert_state
from ..invariants.signature import signature
from ..utils.checking import check_connected, check_knot
from .classes import equivalence_classes


def class_bound(chi):
    """Largest number of ~-classes of a connected diagram with Euler
    characteristic `chi` <= 0."""
    return 1 if chi == 0 else -3 * chi


def generator_crossing_bound(chi, n):
    """Largest crossing number of a generating diagram with Euler
    characteristic `chi` <= 0 and `n` components."""
    if chi == -1 and n == 1:
        return 4
    if chi == 0:
        return 2
    if chi < 0 and n == 2 - chi:
        return -6 * chi
    return -5 * chi + n - 3


def signature_defect(diagram, sigma=None):
    """k(D) = (1 - chi - 2 c_minus - sigma) / 2, with the signature
    normalized so that positive knots have positive signature."""
    st = seifert_state(diagram)
    if sigma is None:
        sigma = signature(diagram)
    return Fraction(1 - st.chi - 2 * diagram.c_minus - sigma, 2)


def generator_bounds_check(diagram):
    """Check the class count and generator crossing bounds on a diagram.

    Parameters
    ----------
    diagram : Diagram
        Connected knot diagram with chi(D) <= 0.

    Returns
    ----------
    certificate : Certificate
        PASS when every applicable bound holds. Witnesses hold chi, n,
        t, c, g, sigma, k and the bounds used. INAPPLICABLE for
        chi(D) > 0.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> generator_bounds_check(parse_dt('4 6 2')).verdict
    'PASS'

    """
    check_connected(diagram, 'generator_bounds_check')
    check_knot(diagram, 'generator_bounds_check')
    st = seifert_state(diagram)
    chi, n, c = st.chi, st.n, diagram.num_crossings
    if chi > 0:
        return Certificate('generator_bounds', INAPPLICABLE,
                           {'chi': chi}, ['chi(D) > 0'])
    classes = equivalence_classes(diagram)
    t = classes.t
    generating = all(s <= 2 for s in classes.sizes)
    sigma = signature(diagram)
    k = signature_defect(diagram, sigma)
    witnesses = {'chi': chi, 'n': n, 't': t, 'c': c, 'g': st.genus,
                 'sigma': sigma, 'k': k, 'generating': generating}
    checks = [('t <= class bound', t <= class_bound(chi),
               '%d <= %d' % (t, class_bound(chi)))]
    if generating:
        bound = generator_crossing_bound(chi, n)
        checks.append(('generator crossings', c <= bound,
                       '%d <= %d' % (c, bound)))
        if st.genus >= 2:
            checks.append(('c <= 10g - 7', c <= 10 * st.genus - 7,
                           '%d <= %d' % (c, 10 * st.genus - 7)))
    if k >= 0 and chi < 0:
        t_bound = -3 * chi - Fraction(3, 2) * k
        checks.append(('t <= -3chi - 3k/2', t <= t_bound,
                       '%d <= %s' % (t, t_bound)))
        if generating:
            c_bound = -5 * chi + n - 2 - k / 2
            checks.append(('signature refined crossings', c <= c_bound,
                           '%d <= %s' % (c, c_bound)))
    return checks_certificate('generator_bounds', checks, witnesses)
