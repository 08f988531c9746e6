# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Exact Laurent polynomials in one variable with integer coefficients.
# Author: knotxtend developers
#
# License: BSD 3 clause

import re
from fractions import Fraction

import sympy


def _to_doubled(exponent):
    doubled = Fraction(exponent) * 2
    if doubled.denominator != 1:
        raise ValueError('Exponents must be integers or half-integers.'
                         ' Got %s' % exponent)
    return int(doubled)


def _from_doubled(doubled):
    if doubled % 2 == 0:
        return doubled // 2
    return Fraction(doubled, 2)


def _power(base, k):
    if k >= 0:
        return base ** k
    if isinstance(base, int):
        return Fraction(1, base ** (-k))
    return 1 / base ** (-k)


class LaurentPoly(object):

    """Laurent polynomial with integer coefficients.

    Exponents are stored doubled so that the half-integer powers
    occurring in the Jones and Alexander polynomials of links are exact.

    Parameters
    ----------
    terms : dict (default: None)
        Mapping from exponent (int, or half-integer as Fraction) to
        integer coefficient. Zero coefficients are dropped.
    var : str (default: 't')
        Name of the variable, used for printing only.

    Examples
    --------
    >>> p = LaurentPoly({1: 1, 0: -1, -1: 1})
    >>> str(p)
    '1*t^-1 + -1*t^0 + 1*t^1'
    >>> p.maxdeg, p.span
    (1, 2)

    """
    __slots__ = ('_c', 'var')

    def __init__(self, terms=None, var='t'):
        self.var = var
        self._c = {}
        if terms:
            for e, c in terms.items():
                c = int(c)
                if c:
                    d = _to_doubled(e)
                    self._c[d] = self._c.get(d, 0) + c
                    if not self._c[d]:
                        del self._c[d]

    @classmethod
    def from_doubled(cls, doubled_terms, var='t'):
        p = cls(var=var)
        p._c = {int(e): int(c) for e, c in doubled_terms.items() if c}
        return p

    @classmethod
    def one(cls, var='t'):
        return cls({0: 1}, var=var)

    @classmethod
    def monomial(cls, exponent, coeff=1, var='t'):
        return cls({exponent: coeff}, var=var)

    @classmethod
    def from_coefficients(cls, coeffs, mindeg=0, var='t'):
        """Build from a dense list starting at exponent `mindeg`."""
        return cls({mindeg + i: c for i, c in enumerate(coeffs)}, var=var)

    @property
    def doubled_terms(self):
        return dict(self._c)

    def is_zero(self):
        return not self._c

    def is_integral(self):
        """True when every exponent is an integer."""
        return all(e % 2 == 0 for e in self._c)

    @property
    def mindeg(self):
        if not self._c:
            raise ValueError('The zero polynomial has no degree.')
        return _from_doubled(min(self._c))

    @property
    def maxdeg(self):
        if not self._c:
            raise ValueError('The zero polynomial has no degree.')
        return _from_doubled(max(self._c))

    @property
    def span(self):
        return self.maxdeg - self.mindeg

    def coeff(self, exponent):
        return self._c.get(_to_doubled(exponent), 0)

    @property
    def mincf(self):
        return self._c[min(self._c)]

    @property
    def maxcf(self):
        return self._c[max(self._c)]

    def terms(self):
        """Sorted list of (exponent, coefficient) pairs."""
        return [(_from_doubled(e), self._c[e]) for e in sorted(self._c)]

    def coefficients(self):
        """Dense coefficient list from mindeg to maxdeg.

        Only defined when all exponents differ by integers.
        """
        if not self._c:
            return []
        lo, hi = min(self._c), max(self._c)
        if any((e - lo) % 2 for e in self._c):
            raise ValueError('Exponents do not lie on a common integer'
                             ' lattice.')
        return [self._c.get(e, 0) for e in range(lo, hi + 1, 2)]

    def _new(self, terms):
        return LaurentPoly.from_doubled(terms, self.var)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, c in other._c.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return self._new({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._c) != 1:
                raise ValueError('Only monomials can be inverted.')
            (e, c), = self._c.items()
            if c not in (1, -1):
                raise ValueError('Only unit monomials can be inverted.')
            return self._new({e * n: c ** (-n)})
        out = LaurentPoly.one(self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def shift(self, exponent):
        """Multiply by var**exponent."""
        d = _to_doubled(exponent)
        return self._new({e + d: c for e, c in self._c.items()})

    def substitute(self, power, var=None):
        """Replace the variable v by w**power.

        `power` may be a Fraction; the resulting exponents must stay
        integral or half-integral.
        """
        power = Fraction(power)
        out = {}
        for e, c in self._c.items():
            ne = e * power
            if ne.denominator != 1:
                raise ValueError('Substitution v -> w^%s leaves exponent'
                                 ' %s non half-integral.'
                                 % (power, Fraction(e, 2) * power))
            out[int(ne)] = out.get(int(ne), 0) + c
        return LaurentPoly.from_doubled(out, var or self.var)

    def symmetrize(self):
        """Multiply by the monomial making the polynomial centered at 0."""
        if not self._c:
            return self
        mid = (min(self._c) + max(self._c))
        if mid % 2:
            raise ValueError('Polynomial cannot be centered at degree 0.')
        return self._new({e - mid // 2: c for e, c in self._c.items()})

    def evaluate(self, value):
        """Evaluate an integral Laurent polynomial exactly.

        `value` may be an int, Fraction, complex or sympy expression.
        """
        if not self.is_integral():
            raise ValueError('Use evaluate_sqrt for half-integral powers.')
        return sum(c * _power(value, e // 2) for e, c in self._c.items())

    def evaluate_sqrt(self, root):
        """Evaluate with `root` standing for the square root of the variable.
        """
        return sum(c * _power(root, e) for e, c in self._c.items())

    def exact_div(self, other):
        """Exact quotient self / other; raises ValueError on a remainder."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError('Division by the zero polynomial.')
        if self.is_zero():
            return self._new({})
        floor = min(self._c) - min(other._c)
        hi_o = max(other._c)
        lead = other._c[hi_o]
        rem = dict(self._c)
        quot = {}
        while rem:
            shift = max(rem) - hi_o
            c = rem[max(rem)]
            if shift < floor or c % lead:
                raise ValueError('%s is not divisible by %s' % (self, other))
            q = c // lead
            quot[shift] = q
            for e, oc in other._c.items():
                v = rem.get(e + shift, 0) - q * oc
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        return self._new(quot)

    def to_sympy(self, symbol=None):
        """Return the sympy expression (integral exponents only)."""
        if symbol is None:
            symbol = sympy.Symbol(self.var)
        return sum((c * symbol ** _from_doubled(e)
                    for e, c in self._c.items()), sympy.Integer(0))

    def __str__(self):
        if not self._c:
            return '0'
        parts = []
        for e in sorted(self._c):
            k = _from_doubled(e)
            parts.append('%d*%s^%s' % (self._c[e], self.var, k))
        return ' + '.join(parts)

    def __repr__(self):
        return 'LaurentPoly(%r, var=%r)' % (dict(self.terms()), self.var)

    _TERM = re.compile(r'^(-?\d+)\*([A-Za-z]\w*)\^(-?\d+(?:/2)?)$')

    @classmethod
    def parse(cls, text, var=None):
        """Inverse of ``str``."""
        text = text.strip()
        if text == '0':
            return cls(var=var or 't')
        terms = {}
        name = var
        for part in text.split(' + '):
            m = cls._TERM.match(part.strip())
            if m is None:
                raise ValueError('Cannot parse polynomial term %r' % part)
            if name is None:
                name = m.group(2)
            terms[Fraction(m.group(3))] = int(m.group(1))
        return cls(terms, var=name)
