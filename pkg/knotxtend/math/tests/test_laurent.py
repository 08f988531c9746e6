# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction
from knotxtend.math import LaurentPoly
from knotxtend.utils import assert_raises


def trefoil_alexander():
    return LaurentPoly({1: 1, 0: -1, -1: 1})


def test_text_form():
    p = trefoil_alexander()
    assert str(p) == '1*t^-1 + -1*t^0 + 1*t^1'
    assert LaurentPoly.parse(str(p)) == p
    assert str(LaurentPoly()) == '0'
    assert LaurentPoly.parse('0').is_zero()


def test_half_integer_text_form():
    p = LaurentPoly({Fraction(1, 2): -1, Fraction(5, 2): -1})
    assert str(p) == '-1*t^1/2 + -1*t^5/2'
    assert LaurentPoly.parse(str(p)) == p
    assert p.maxdeg == Fraction(5, 2)
    assert not p.is_integral()


def test_arithmetic():
    t = LaurentPoly.monomial(1)
    assert (t + 1) * (t - 1) == t ** 2 - 1
    assert (t ** 2) ** -1 == LaurentPoly.monomial(-2)
    assert 3 - t == LaurentPoly({0: 3, 1: -1})
    assert (t - t).is_zero()


def test_degrees():
    p = trefoil_alexander()
    assert p.mindeg == -1
    assert p.maxdeg == 1
    assert p.span == 2
    assert p.coefficients() == [1, -1, 1]
    assert p.mincf == 1


def test_exact_div():
    t = LaurentPoly.monomial(1)
    assert (t ** 2 - 1).exact_div(t - 1) == t + 1
    assert (t ** 3 - t ** -1).exact_div(t) == t ** 2 - t ** -2
    assert_raises(ValueError, 'is not divisible', (t ** 2 + 1).exact_div,
                  t - 1)


def test_substitute_and_evaluate():
    a = LaurentPoly({-4: 1}, var='A')
    assert a.substitute(Fraction(-1, 4), var='t') == LaurentPoly.monomial(1)
    assert trefoil_alexander().evaluate(-1) == -3
    assert trefoil_alexander().evaluate(2) == Fraction(3, 2)


def test_symmetrize():
    p = LaurentPoly({0: 1, 1: -1, 2: 1})
    assert p.symmetrize() == trefoil_alexander()
