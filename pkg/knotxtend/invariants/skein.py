# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# The skein polynomial P(l, m) by descent to descending diagrams, and
# the braid index bounds read off from it.
# Author: knotxtend developers
#
# License: BSD 3 clause

from .._base import checks_certificate
from ..diagram import seifert_state, switch_crossing, smooth_crossing
from ..diagram._diagram import over_in
from ..math import BiPoly
from ..utils.checking import check_size


def unlink_value(n):
    """P of the n-component crossingless unlink: mu^(n-1),
    mu = -(l + l^-1) m^-1."""
    mu = BiPoly({(1, -1): -1, (-1, -1): -1})
    return mu ** (n - 1)


def first_ascending(diagram):
    """First crossing met from below along a basepointed traversal.

    Components are walked in the order of `Diagram.components`, each from
    its smallest edge label. Returns None for descending diagrams, which
    are diagrams of unlinks.
    """
    seen = set()
    for cycle in diagram.components():
        for e in cycle:
            c, p = diagram.head(e)
            if c in seen:
                continue
            seen.add(c)
            if p != over_in(diagram.signs[c]):
                return c
    return None


def is_descending(diagram):
    return first_ascending(diagram) is None


class SkeinTree(object):

    """Memoized evaluation of the skein relation

        l^-1 P(D+) + l P(D-) = -m P(D0),

    switching the first ascending crossing until the diagram descends.

    Attributes
    ----------
    nodes : int
        Number of distinct diagrams evaluated.
    leaves : int
        Number of descending diagrams reached.

    """
    def __init__(self):
        self._memo = {}
        self.nodes = 0
        self.leaves = 0

    def evaluate(self, diagram):
        cached = self._memo.get(diagram)
        if cached is not None:
            return cached
        self.nodes += 1
        x = first_ascending(diagram)
        if x is None:
            self.leaves += 1
            value = unlink_value(diagram.num_components)
        else:
            switched = self.evaluate(switch_crossing(diagram, x))
            smoothed = self.evaluate(smooth_crossing(diagram, x))
            if diagram.signs[x] > 0:
                # P(D+) = -l^2 P(D-) - l m P(D0)
                value = (BiPoly({(2, 0): -1}) * switched
                         + BiPoly({(1, 1): -1}) * smoothed)
            else:
                # P(D-) = -l^-2 P(D+) - l^-1 m P(D0)
                value = (BiPoly({(-2, 0): -1}) * switched
                         + BiPoly({(-1, 1): -1}) * smoothed)
        self._memo[diagram] = value
        return value


def skein_polynomial(diagram, cap=20, tree=None):
    """Skein (HOMFLY-PT) polynomial, 1 on the unknot.

    Parameters
    ----------
    diagram : Diagram
    cap : int (default: 20)
    tree : SkeinTree (default: None)
        Reuse the memo and statistics of an existing tree.

    Returns
    ----------
    P : BiPoly

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> str(skein_polynomial(parse_dt('4 6 2')))
    '-2*l^2*m^0 + 1*l^2*m^2 + -1*l^4*m^0'

    """
    check_size(diagram, cap, 'The skein polynomial')
    tree = SkeinTree() if tree is None else tree
    return tree.evaluate(diagram)


def mwf(diagram, cap=20, P=None):
    """Morton-Williams-Franks lower bound span_l(P) / 2 + 1 for the braid
    index."""
    if P is None:
        P = skein_polynomial(diagram, cap=cap)
    return P.l_span // 2 + 1


def morton_check(diagram, cap=20, P=None):
    """Check 1 - s + w <= mindeg_l P <= maxdeg_l P <= s - 1 + w.

    Returns
    ----------
    certificate : Certificate
        Witnesses hold the four numbers and 'mwf'.

    """
    if P is None:
        P = skein_polynomial(diagram, cap=cap)
    s = seifert_state(diagram).s
    w = diagram.writhe
    lo, hi = P.l_degrees()
    low_bound, high_bound = 1 - s + w, s - 1 + w
    checks = [('1 - s + w <= mindeg_l P', low_bound <= lo,
               '%d <= %d' % (low_bound, lo)),
              ('maxdeg_l P <= s - 1 + w', hi <= high_bound,
               '%d <= %d' % (hi, high_bound))]
    return checks_certificate('morton', checks,
                              {'mindeg': lo, 'maxdeg': hi,
                               'lower': low_bound, 'upper': high_bound,
                               'mwf': (hi - lo) // 2 + 1})
