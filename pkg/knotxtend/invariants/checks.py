# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Certificates built from the polynomial invariants: regularization of
# twist series, Bennequin-type genus bounds and the positive knot
# crossing bound.
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

from .._base import Certificate, checks_certificate, PASS, FAIL, INAPPLICABLE
from ..diagram import seifert_state, reduce_nugatory
from ..utils.checking import check_knot
from ..utils.errors import InconsistentSeed
from .alexander import v2
from .bracket import jones
from .signature import signature


def regularization_check(seeds, strict=False, cap=24):
    """Check that c(D'') - maxdeg V(D'') takes one value on the twisted
    diagrams of every seed.

    Parameters
    ----------
    seeds : iterable of Diagram
        Diagrams sharing a generator.
    strict : bool (default: False)
        Raise InconsistentSeed instead of returning a FAIL certificate.
    cap : int (default: 24)
        Crossing cap of the bracket.

    Returns
    ----------
    certificate : Certificate
        PASS with the common value as witness 'n'; an empty seed passes
        vacuously.

    """
    from ..equivalence import x_star
    values = {}
    for i, seed in enumerate(seeds):
        for d in x_star(seed):
            n = d.num_crossings - jones(d, cap=cap).maxdeg
            values.setdefault(n, []).append((i, d.num_crossings))
    if not values:
        return Certificate('regularization', PASS, {'n': None},
                           ['empty seed'])
    if len(values) == 1:
        (n, members), = values.items()
        return Certificate('regularization', PASS,
                           {'n': n, 'diagrams': len(members)},
                           ['c - maxdeg V = %s on %d diagrams'
                            % (n, len(members))])
    if strict:
        raise InconsistentSeed('c - maxdeg V takes the values %s.'
                               % ', '.join(str(v) for v in sorted(values)))
    return Certificate('regularization', FAIL,
                       {'values': sorted(values)},
                       ['c - maxdeg V is not constant: %s'
                        % sorted(values)])


def negative_classes(diagram):
    """Number of ~-classes holding a negative crossing."""
    from ..equivalence import equivalence_classes
    ec = equivalence_classes(diagram)
    return sum(1 for cls in ec.sim
               if any(diagram.signs[x] < 0 for x in cls))


def slice_genus_bounds(diagram, sigma=None):
    """Lower bounds for the smooth slice genus of a knot.

    Returns
    ----------
    bounds : dict
        'signature' (|sigma| / 2), 'rudolph' (g - c_minus + s_minus) and
        'classes' (g - k, k the number of ~-classes with a negative
        crossing).

    """
    check_knot(diagram, 'slice_genus_bounds')
    st = seifert_state(diagram)
    if sigma is None:
        sigma = signature(diagram)
    return {'signature': Fraction(abs(sigma), 2),
            'rudolph': st.genus - diagram.c_minus + st.s_minus,
            'classes': st.genus - negative_classes(diagram)}


def bennequin_checks(diagram, genus=None):
    """Check the Bennequin and Rudolph-Bennequin genus inequalities.

    Parameters
    ----------
    diagram : Diagram
        Knot diagram.
    genus : int (default: None)
        Known genus of the knot. When None the diagram must be
        alternating and the genus is read from its reduced form.

    Returns
    ----------
    certificate : Certificate
        INAPPLICABLE when no exact genus is available.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> bennequin_checks(parse_dt('4 6 2')).verdict
    'PASS'

    """
    check_knot(diagram, 'bennequin_checks')
    st = seifert_state(diagram)
    if genus is None:
        if not diagram.is_alternating():
            return Certificate('bennequin', INAPPLICABLE, {},
                               ['no genus reference for a non-alternating'
                                ' diagram'])
        reduced, _ = reduce_nugatory(diagram)
        genus = seifert_state(reduced).genus
        source = 'alternating'
    else:
        source = 'given'
    bounds = slice_genus_bounds(diagram)
    g, cm = st.genus, diagram.c_minus
    checks = [('g(K) >= g(D) - c_minus', genus >= g - cm,
               '%s >= %s' % (genus, g - cm)),
              ('g(K) >= g(D) - c_minus + s_minus',
               genus >= bounds['rudolph'],
               '%s >= %s' % (genus, bounds['rudolph'])),
              ('g(K) >= g(D) - k', genus >= bounds['classes'],
               '%s >= %s' % (genus, bounds['classes'])),
              ('g(K) >= |sigma| / 2', genus >= bounds['signature'],
               '%s >= %s' % (genus, bounds['signature']))]
    return checks_certificate('bennequin', checks,
                              {'genus': genus, 'source': source, 'g': g,
                               'c_minus': cm, 's_minus': st.s_minus})


def positive_crossing_check(diagram):
    """Check c(D) <= 9 g - 8 + 2 v2 on a reduced positive diagram that is
    not the trefoil.

    Returns
    ----------
    certificate : Certificate
        INAPPLICABLE for diagrams with a negative crossing, a nugatory
        crossing, or genus 1 with three crossings.

    """
    check_knot(diagram, 'positive_crossing_check')
    _, nugatory = reduce_nugatory(diagram)
    st = seifert_state(diagram)
    if diagram.c_minus or nugatory or not diagram.crossings:
        return Certificate('positive_crossings', INAPPLICABLE, {},
                           ['not a reduced positive diagram'])
    if st.genus == 1 and diagram.num_crossings == 3:
        return Certificate('positive_crossings', INAPPLICABLE, {},
                           ['trefoil'])
    w = v2(diagram)
    bound = 9 * st.genus - 8 + 2 * w
    return checks_certificate(
        'positive_crossings',
        [('c <= 9g - 8 + 2v2', diagram.num_crossings <= bound,
          '%d <= %d' % (diagram.num_crossings, bound))],
        {'c': diagram.num_crossings, 'g': st.genus, 'v2': w})
