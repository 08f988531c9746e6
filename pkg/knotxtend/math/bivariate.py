# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Integer Laurent polynomials in the two skein variables l and m.
# Author: knotxtend developers
#
# License: BSD 3 clause

from .laurent import LaurentPoly

# Powers of i as (real, imaginary) pairs.
_I_POW = ((1, 0), (0, 1), (-1, 0), (0, -1))


class BiPoly(object):

    """Laurent polynomial in l and m with integer coefficients.

    Parameters
    ----------
    terms : dict (default: None)
        Mapping from (l-exponent, m-exponent) to integer coefficient.

    Examples
    --------
    >>> trefoil = BiPoly({(2, 0): -2, (4, 0): -1, (2, 2): 1})
    >>> str(trefoil.to_jones())
    '1*t^1 + 1*t^3 + -1*t^4'

    """
    __slots__ = ('_c',)

    def __init__(self, terms=None):
        self._c = {}
        for (a, b), c in (terms or {}).items():
            if c:
                key = (int(a), int(b))
                v = self._c.get(key, 0) + int(c)
                if v:
                    self._c[key] = v
                else:
                    self._c.pop(key, None)

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def l(cls, k=1, coeff=1):
        return cls({(k, 0): coeff})

    @classmethod
    def m(cls, k=1, coeff=1):
        return cls({(0, k): coeff})

    def is_zero(self):
        return not self._c

    def terms(self):
        return sorted(self._c.items())

    def coeff(self, a, b):
        return self._c.get((a, b), 0)

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly({(0, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = BiPoly(self._c)
        for k, c in other._c.items():
            v = out._c.get(k, 0) + c
            if v:
                out._c[k] = v
            else:
                out._c.pop(k, None)
        return out

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for (a1, b1), c1 in self._c.items():
            for (a2, b2), c2 in other._c.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError('Only monomials can be inverted.')
            ((a, b), c), = self._c.items()
            if c not in (1, -1):
                raise ValueError('Only unit monomials can be inverted.')
            return BiPoly({(a * n, b * n): c ** (-n)})
        out = BiPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def l_degrees(self):
        exps = [a for a, _ in self._c]
        return min(exps), max(exps)

    def m_degrees(self):
        exps = [b for _, b in self._c]
        return min(exps), max(exps)

    @property
    def l_span(self):
        lo, hi = self.l_degrees()
        return hi - lo

    def to_jones(self):
        """Substitute l = -it, m = i(t^(-1/2) - t^(1/2))."""
        # c l^a m^b -> c i^(b-a) t^a u^b with u = t^(-1/2) - t^(1/2)
        u = LaurentPoly.from_doubled({-1: 1, 1: -1})
        k = max(0, -self.m_degrees()[0])
        re, im = LaurentPoly(), LaurentPoly()
        for (a, b), c in self._c.items():
            r, i = _I_POW[(b - a) % 4]
            term = (u ** (b + k)).shift(a) * c
            re, im = re + term * r, im + term * i
        if not im.is_zero():
            raise ValueError('Jones substitution left an imaginary part.')
        return re.exact_div(u ** k)

    def to_conway(self):
        """Substitute l = i, m = iz."""
        re, im = LaurentPoly(var='z'), LaurentPoly(var='z')
        for (a, b), c in self._c.items():
            r, i = _I_POW[(a + b) % 4]
            re = re + LaurentPoly.monomial(b, c * r, var='z')
            im = im + LaurentPoly.monomial(b, c * i, var='z')
        if not im.is_zero():
            raise ValueError('Conway substitution left an imaginary part.')
        return re

    def to_alexander(self):
        return conway_to_alexander(self.to_conway())

    def __str__(self):
        if not self._c:
            return '0'
        return ' + '.join('%d*l^%d*m^%d' % (c, a, b)
                          for (a, b), c in self.terms())

    def __repr__(self):
        return 'BiPoly(%r)' % dict(self.terms())


def conway_to_alexander(nabla):
    """Delta(t) = nabla(t^(1/2) - t^(-1/2))."""
    z = LaurentPoly.from_doubled({1: 1, -1: -1})
    out = LaurentPoly()
    for k, c in nabla.terms():
        if k < 0:
            raise ValueError('Conway polynomial has negative powers: %s'
                             % nabla)
        out = out + (z ** int(k)) * c
    return out


def conway_at_2i(nabla):
    """Evaluate nabla(2i) as a pair (real, imaginary) of integers."""
    re, im = 0, 0
    for k, c in nabla.terms():
        r, i = _I_POW[int(k) % 4]
        scale = c * 2 ** int(k)
        re, im = re + scale * r, im + scale * i
    return re, im
