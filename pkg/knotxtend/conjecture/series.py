# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Alexander polynomials of whole twist series as nonnegative combinations
# of the polynomials of smoothed generator diagrams.
# Author: knotxtend developers
#
# License: BSD 3 clause

from itertools import combinations
from math import gcd

import numpy as np

from ..diagram import seifert_state, smooth_crossing
from ..equivalence import equivalence_classes, is_generating, t2_twist
from ..equivalence.classes import class_sign
from ..invariants import alexander, conway
from ..math import LaurentPoly, conway_to_alexander
from ..utils.checking import check_knot
from ..utils.errors import NotGenerating, DimensionMismatch

_ONE_MINUS_T = LaurentPoly({0: 1, 1: -1})


def reduce_term(poly):
    """Divide out (1 - t) factors, powers of t and the content.

    Returns
    ----------
    (reduced, power) : (LaurentPoly, int)
        `reduced` has min-degree 0, a positive constant term and no root
        at t = 1; `power` is the number of (1 - t) factors removed.

    """
    if poly.is_zero():
        raise ValueError('The zero polynomial has no reduced form.')
    power = 0
    while poly.evaluate(1) == 0:
        poly = poly.exact_div(_ONE_MINUS_T)
        power += 1
    coeffs = poly.coefficients()
    content = 0
    for c in coeffs:
        content = gcd(content, abs(c))
    if coeffs[0] < 0:
        content = -content
    return LaurentPoly.from_coefficients([c // content for c in coeffs]), \
        power


def _twist_classes(diagram, classes, x):
    out = diagram
    for cls, xi in zip(classes, x):
        if xi < 1:
            raise ValueError('Series entries must be >= 1 in a'
                             ' decomposition. Got %r' % (tuple(x),))
        for _ in range(xi - 1):
            out = t2_twist(out, cls[0])
    return out


def _smooth_classes(diagram, classes, subset):
    crossings = sorted((classes[i][0] for i in subset), reverse=True)
    out = diagram
    for x in crossings:
        out = smooth_crossing(out, x)
    return out


class SeriesDecomposition(object):

    """Alexander polynomials over the twist series of a diagram.

    For a series member D_x, x_i >= 1 counting the t2 twists at class i
    plus one,

        Delta(D_x) = sum_S prod_{i in S} (x_i - 1) * Delta_S,

    where S runs over sets of ~-classes and Delta_S is the Alexander
    polynomial of the generator with one crossing smoothed in each
    class of S, times the class signs and z^|S|. Polynomials are kept in
    the frame t^g Delta, with exponents 0..2g and a positive constant
    term.

    Attributes
    ----------
    generator : Diagram
    genus : int
    classes : list of lists
        The ~-classes, as in `equivalence_classes(generator).sim`.
    class_signs : list of int
    subsets : list of tuple
        Class index sets S of the nonzero terms; the first is ().
    terms : list of LaurentPoly
        Frame polynomials Delta_S, aligned with `subsets`.
    conway_terms : list of LaurentPoly
        The same terms as Conway polynomials in z.
    reduced : list of LaurentPoly
        Distinct reduced polynomials (see `reduce_term`).
    exponents : list of int
        n_i = 2g - maxdeg of each reduced polynomial.
    sign : int
        Factor turning the Conway-normalized polynomials into the frame.
    equal_signs : bool
        All terms have lowest coefficients of equal sign.
    consistency : list of (tuple, bool)
        Sampled series vectors and whether the directly computed
        Alexander polynomial matched the decomposition.

    """
    def __init__(self, generator, genus, classes, class_signs, subsets,
                 terms, conway_terms, sign):
        self.generator = generator
        self.genus = genus
        self.classes = classes
        self.class_signs = class_signs
        self.subsets = subsets
        self.terms = terms
        self.conway_terms = conway_terms
        self.sign = sign
        self.equal_signs = all(T.mincf > 0 for T in terms)
        self.reduced = []
        self.exponents = []
        for T in terms:
            r, _ = reduce_term(T)
            if r not in self.reduced:
                self.reduced.append(r)
                self.exponents.append(2 * genus - r.maxdeg)
        self.consistency = []

    @property
    def consistent(self):
        return all(ok for _, ok in self.consistency)

    def coefficients(self, x):
        """Multipliers a_S of the terms at series vector `x`."""
        x = tuple(int(v) for v in x)
        if len(x) != len(self.classes):
            raise DimensionMismatch('The diagram has %d ~-classes but the'
                                    ' vector has %d entries.'
                                    % (len(self.classes), len(x)))
        out = []
        for subset in self.subsets:
            a = 1
            for i in subset:
                a *= x[i] - 1
            out.append(a)
        return out

    def member_polynomial(self, x):
        """Frame Alexander polynomial of the series member at `x`."""
        total = LaurentPoly()
        for a, T in zip(self.coefficients(x), self.terms):
            if a:
                total = total + T * a
        return total

    def member_diagram(self, x):
        """Twist each class x_i - 1 times at its lowest crossing."""
        if len(x) != len(self.classes):
            raise DimensionMismatch('The diagram has %d ~-classes but the'
                                    ' vector has %d entries.'
                                    % (len(self.classes), len(x)))
        return _twist_classes(self.generator, self.classes, x)

    def check_member(self, x, cap=20):
        """Compare the decomposition with a direct computation at `x`."""
        d = self.member_diagram(x)
        direct = alexander(d, cap=cap).shift(self.genus) * self.sign
        return direct == self.member_polynomial(x)

    def frame_polynomial(self):
        """Frame polynomial of the generator itself."""
        return self.terms[0]

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return ('SeriesDecomposition(genus=%d, classes=%d, terms=%d,'
                ' reduced=%d)' % (self.genus, len(self.classes),
                                  len(self.terms), len(self.reduced)))


def series_decomposition(generator, check=5, seed=0, cap=20,
                         require_generating=True):
    """Decompose the Alexander polynomials of a twist series.

    Parameters
    ----------
    generator : Diagram
        Alternating knot diagram of genus >= 1.
    check : int (default: 5)
        Number of random series vectors (entries 1..3) whose Alexander
        polynomial is recomputed directly and compared.
    seed : int (default: 0)
        Seed of the random vectors.
    cap : int (default: 20)
        Crossing cap of the skein polynomial.
    require_generating : bool (default: True)
        Raise NotGenerating when a ~-class has more than two crossings.
        Twisted diagrams decompose the same way and pass False.

    Returns
    ----------
    decomposition : SeriesDecomposition

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> sd = series_decomposition(parse_dt('4 6 8 2'))
    >>> [str(p) for p in sd.reduced]
    ['1*t^0 + -3*t^1 + 1*t^2', '1*t^0']

    """
    check_knot(generator, 'A series decomposition')
    if require_generating and not is_generating(generator):
        raise NotGenerating('The diagram has a ~-class with more than 2'
                            ' crossings.')
    genus = seifert_state(generator).genus
    if genus < 1:
        raise NotGenerating('Series decompositions need genus >= 1. Got'
                            ' genus %s.' % genus)
    classes = equivalence_classes(generator).sim
    signs = [class_sign(generator, cls) for cls in classes]

    subsets, conway_terms = [], []
    for size in range(len(classes) + 1):
        for subset in combinations(range(len(classes)), size):
            smoothed = _smooth_classes(generator, classes, subset)
            nabla = conway(smoothed, method='skein', cap=cap)
            if nabla.is_zero():
                continue
            eps = 1
            for i in subset:
                eps *= signs[i]
            subsets.append(subset)
            conway_terms.append(nabla.shift(size) * eps)

    frames = [conway_to_alexander(n).shift(genus) for n in conway_terms]
    sign = 1 if frames[0].mincf > 0 else -1
    sd = SeriesDecomposition(generator, genus, classes, signs, subsets,
                             [T * sign for T in frames],
                             [n * sign for n in conway_terms], sign)

    rng = np.random.RandomState(seed)
    for _ in range(check):
        x = tuple(int(v) for v in rng.randint(1, 4, size=len(classes)))
        sd.consistency.append((x, sd.check_member(x, cap=cap)))
    return sd
