# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Coefficient tests of Alexander polynomials: log-concavity, Fox's
# trapezoidal shape, the Ozsvath-Szabo inequalities and ratio bounds.
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

from scipy.special import comb

from .._base import Certificate, checks_certificate, INAPPLICABLE
from ..diagram import Diagram
from .series import SeriesDecomposition, series_decomposition


def normalized_coefficients(delta):
    """Coefficients from the minimal degree on, constant term > 0."""
    if delta.is_zero():
        raise ValueError('The zero polynomial has no coefficients.')
    coeffs = delta.shift(-delta.mindeg).coefficients()
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return coeffs


def alternates(coeffs):
    """True when no coefficient vanishes and the signs alternate."""
    if any(c == 0 for c in coeffs):
        return False
    return all((a > 0) != (b > 0) for a, b in zip(coeffs, coeffs[1:]))


def _not_alternating(test, coeffs):
    return Certificate(test, INAPPLICABLE, {'coefficients': coeffs},
                       ['coefficient signs do not alternate'])


def logconcavity_test(delta):
    """Check X_k^2 >= X_(k-1) X_(k+1) on the absolute coefficients.

    Equality is only accepted when all three coefficients are equal.

    Parameters
    ----------
    delta : LaurentPoly

    Returns
    ----------
    certificate : Certificate
        INAPPLICABLE when the coefficient signs do not alternate.

    Examples
    -----------
    >>> from knotxtend.math import LaurentPoly
    >>> logconcavity_test(LaurentPoly({-1: -1, 0: 3, 1: -1})).verdict
    'PASS'

    """
    coeffs = normalized_coefficients(delta)
    if not alternates(coeffs):
        return _not_alternating('logconcavity', coeffs)
    X = [abs(c) for c in coeffs]
    checks = []
    for k in range(1, len(X) - 1):
        lhs, rhs = X[k] ** 2, X[k - 1] * X[k + 1]
        flat = X[k - 1] == X[k] == X[k + 1]
        ok = lhs > rhs or (lhs == rhs and flat)
        checks.append(('k = %d' % k, ok, '%d >= %d' % (lhs, rhs)))
    return checks_certificate('logconcavity', checks, {'coefficients': X})


def trapezoidal_test(delta, sigma=None):
    """Check that |Delta_k| rises strictly up to some n and then stays
    constant up to the middle coefficient.

    Parameters
    ----------
    delta : LaurentPoly
    sigma : int (default: None)
        When given, also check n >= g - |sigma| / 2.

    Returns
    ----------
    certificate : Certificate
        Witness 'n' is the end of the strictly rising part.

    """
    coeffs = normalized_coefficients(delta)
    if not alternates(coeffs):
        return _not_alternating('trapezoidal', coeffs)
    X = [abs(c) for c in coeffs]
    g = (len(X) - 1) // 2
    n = 0
    while n < g and X[n + 1] > X[n]:
        n += 1
    checks = [('constant after n', all(X[k] == X[n]
                                       for k in range(n, g + 1)),
               'X[%d..%d] = %s' % (n, g, X[n:g + 1]))]
    if sigma is not None:
        bound = g - abs(sigma) // 2
        checks.append(('n >= g - |sigma| / 2', n >= bound,
                       '%d >= %d' % (n, bound)))
    return checks_certificate('trapezoidal', checks,
                              {'n': n, 'g': g, 'coefficients': X[:g + 1]})


def _ceil_div(a, b):
    return -((-a) // b)


def os_inequalities(delta, sigma, genus=None):
    """Ozsvath-Szabo inequalities of an alternating knot.

    For s = 0, ..., g - 1,

        (-1)^(s+g) sum_{j=1}^{g-s} j [Delta]_(s+g+j)
            <= (-1)^(s+sigma/2) max(0, ceil((|sigma| - 2s) / 4)),

    with Delta normalized to min-degree 0 and a positive constant term.

    Parameters
    ----------
    delta : LaurentPoly
    sigma : int
        Signature (even).
    genus : int (default: None)
        Half the span of `delta` when None.

    Returns
    ----------
    certificate : Certificate

    Examples
    -----------
    >>> from knotxtend.math import LaurentPoly
    >>> d = LaurentPoly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
    >>> os_inequalities(d, 4).verdict
    'PASS'

    """
    if sigma % 2:
        raise ValueError('The signature of a knot is even. Got %d' % sigma)
    coeffs = normalized_coefficients(delta)
    g = (len(coeffs) - 1) // 2 if genus is None else genus
    coeffs = coeffs + [0] * max(0, 2 * g + 1 - len(coeffs))
    checks = []
    values = []
    for s in range(g):
        total = sum(j * coeffs[s + g + j] for j in range(1, g - s + 1))
        lhs = total if (s + g) % 2 == 0 else -total
        bound = max(0, _ceil_div(abs(sigma) - 2 * s, 4))
        rhs = bound if (s + sigma // 2) % 2 == 0 else -bound
        values.append([s, lhs, rhs])
        checks.append(('s = %d' % s, lhs <= rhs, '%d <= %d' % (lhs, rhs)))
    return checks_certificate('os', checks,
                              {'g': g, 'sigma': sigma, 'values': values})


def _frame_terms(source, cap):
    if isinstance(source, SeriesDecomposition):
        return source.terms, 2 * source.genus
    if isinstance(source, Diagram):
        sd = series_decomposition(source, cap=cap)
        return sd.terms, 2 * sd.genus
    terms = list(source)
    return terms, max(int(T.maxdeg) for T in terms)


def ratio_bounds(source, i, cap=20):
    """Sharp bounds of |Delta_[i] / Delta_[0]| over a twist series.

    Every member is a nonnegative combination of the decomposition
    terms including the generator's own, so the ratio over the series
    ranges between the smallest and the largest term ratio.

    Parameters
    ----------
    source : Diagram, SeriesDecomposition or list of LaurentPoly
        A list is taken as frame terms with exponents >= 0.
    i : int
        Coefficient index, 1 <= i <= 2g.
    cap : int (default: 20)

    Returns
    ----------
    (low, high) : (Fraction, Fraction or None)
        `high` is None when a term without constant coefficient makes
        the ratio unbounded.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> ratio_bounds(parse_dt('4 6 2'), 1)
    (Fraction(1, 1), Fraction(2, 1))

    """
    terms, top = _frame_terms(source, cap)
    if i < 1 or i > max(top, 1):
        raise ValueError('Coefficient index must lie in 1..%d. Got %d'
                         % (max(top, 1), i))
    ratios = []
    unbounded = False
    for T in terms:
        c0 = T.coeff(0)
        if c0 == 0:
            unbounded = unbounded or T.coeff(i) != 0
            continue
        ratios.append(abs(Fraction(T.coeff(i), c0)))
    high = None if unbounded else max(ratios)
    return min(ratios), high


def binomial_ratio_check(delta, sigma):
    """Check 0 <= (-1)^j Delta_[j] / Delta_[0] < C(2g, j), 0 < j < 2g, for
    knots with |sigma| = 2g.

    Returns
    ----------
    certificate : Certificate
        INAPPLICABLE unless |sigma| = 2g.

    """
    coeffs = normalized_coefficients(delta)
    top = len(coeffs) - 1
    if abs(sigma) != top:
        return Certificate('binomial_ratio', INAPPLICABLE,
                           {'sigma': sigma, 'span': top},
                           ['|sigma| differs from 2g'])
    checks = []
    for j in range(1, top):
        r = Fraction(coeffs[j] * (-1) ** j, coeffs[0])
        bound = comb(top, j, exact=True)
        checks.append(('j = %d' % j, 0 <= r < bound,
                       '0 <= %s < %d' % (r, bound)))
    return checks_certificate('binomial_ratio', checks,
                              {'sigma': sigma, 'span': top})
