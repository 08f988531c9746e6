# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Exact Sturm sequences for real root counting.
# Author: knotxtend developers
#
# License: BSD 3 clause

import sympy

_X = sympy.Symbol('x')


def _as_poly(poly):
    if isinstance(poly, sympy.Poly):
        return poly.set_domain(sympy.QQ)
    # dense coefficient list, highest degree first
    return sympy.Poly(list(poly), _X, domain=sympy.QQ)


def sturm_sequence(poly):
    """Sturm sequence p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i).

    Parameters
    ----------
    poly : sympy.Poly or list
        Polynomial, or its coefficients with the highest degree first.

    Returns
    ----------
    sequence : list of sympy.Poly

    """
    p0 = _as_poly(poly)
    if p0.is_zero:
        raise ValueError('The zero polynomial has no Sturm sequence.')
    sequence = [p0]
    p1 = p0.diff()
    while not p1.is_zero:
        sequence.append(p1)
        p1 = -sequence[-2].rem(sequence[-1])
    return sequence


def sign_changes(values):
    """Count sign changes in a sequence, ignoring zeros."""
    nonzero = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))


def _values_at(sequence, point):
    if point is None or point in ('-oo', '+oo'):
        signs = []
        for p in sequence:
            lc = p.LC()
            if point == '-oo' and p.degree() % 2:
                lc = -lc
            signs.append(lc)
        return signs
    return [p.eval(sympy.Rational(point)) for p in sequence]


def count_real_roots(poly, a='-oo', b='+oo'):
    """Number of distinct real roots in the half-open interval (a, b].

    `a` and `b` are rationals, or '-oo' / '+oo'.
    """
    sequence = sturm_sequence(poly)
    return (sign_changes(_values_at(sequence, a))
            - sign_changes(_values_at(sequence, b)))


def is_positive_on_line(poly):
    """Decide exactly whether a real polynomial is > 0 on all of R.

    Returns
    ----------
    (positive, witness) : (bool, dict)
        The witness lists the Sturm sign-change counts at -oo and +oo and
        the value at 0 that fixes the sign.

    """
    p = _as_poly(poly)
    if p.is_zero:
        return False, {'reason': 'zero polynomial'}
    sequence = sturm_sequence(p)
    lo = sign_changes(_values_at(sequence, '-oo'))
    hi = sign_changes(_values_at(sequence, '+oo'))
    at_zero = p.eval(0)
    witness = {'changes_at_minus_inf': lo, 'changes_at_plus_inf': hi,
               'value_at_0': str(at_zero), 'degree': p.degree()}
    return (lo - hi == 0 and at_zero > 0), witness
