# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

import pytest

from knotxtend.conjecture import (positive_zero_test, rouche_test,
                                  hoste_numeric_check, sign_at_root,
                                  line_parts, series_decomposition)
from knotxtend.diagram import switch_crossing
from knotxtend.equivalence import realize_series
from knotxtend.invariants import alexander
from knotxtend.math import LaurentPoly
from knotxtend.data import trefoil, figure_eight, knot
from knotxtend.utils import assert_raises, assert_verdict
from knotxtend.utils.errors import NotGenerating, MissingUnitPolynomial


def poly(*coeffs):
    return LaurentPoly.from_coefficients(list(coeffs))


def test_line_parts():
    # (-1 + i tau)^2 - 3 (-1 + i tau) + 1 = 5 - tau^2 - 5 i tau
    assert line_parts([1, -3, 1]) == ([5, 0, -1], [0, -5, 0])
    assert line_parts([7]) == ([7], [0])


def test_sign_at_root():
    assert sign_at_root(LaurentPoly.one(), 3) == 1
    assert sign_at_root(poly(-3, 1), 3) == -1
    assert sign_at_root(poly(1, -3, 1), 3) == 0
    assert sign_at_root(poly(1, -3, 1), Fraction(7, 2)) == 1
    assert_raises(ValueError, 'no root > 1', sign_at_root, poly(1, 1), 2)


@pytest.mark.parametrize('name', ['3_1', '4_1', '5_1', '5_2', '6_1', '6_2',
                                  '6_3', '7_1'])
def test_hoste_table(name):
    assert_verdict(hoste_numeric_check(alexander(knot(name))), 'PASS')


def test_hoste_figure_eight():
    cert = hoste_numeric_check(alexander(figure_eight()))
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['roots'] == 2
    assert cert.witnesses['min_re_lower'] > -1


def test_hoste_fails_left_of_line():
    cert = hoste_numeric_check(poly(1, 3, 1))
    assert_verdict(cert, 'FAIL')
    assert len(cert.witnesses['left']) == 1


def test_hoste_root_on_line():
    # roots -1 +- i
    cert = hoste_numeric_check(poly(2, 2, 1))
    assert_verdict(cert, 'FAIL')
    assert 'on_line' in cert.witnesses


def test_hoste_constant():
    assert_verdict(hoste_numeric_check(LaurentPoly.one()), 'PASS')
    assert_raises(ValueError, 'zero polynomial', hoste_numeric_check,
                  LaurentPoly())


@pytest.mark.slow
def test_hoste_series_members():
    for x in [(1, 1), (2, 1), (3, 2), (4, 4)]:
        delta = alexander(realize_series(figure_eight(), list(x)))
        assert_verdict(hoste_numeric_check(delta), 'PASS')


def test_positive_zero_branches():
    cert = positive_zero_test(trefoil())
    assert_verdict(cert, 'RESOLVED-BY-BRANCH')
    assert cert.witnesses['branch'] == 'unit circle'
    cert = positive_zero_test(figure_eight())
    assert_verdict(cert, 'RESOLVED-BY-BRANCH')
    assert cert.witnesses['genus'] == 1


@pytest.mark.slow
def test_positive_zero_root_sum():
    cert = positive_zero_test(knot('5_1'), sigma=0)
    assert_verdict(cert, 'RESOLVED-BY-BRANCH')
    assert cert.witnesses['branch'] == 'root sum'


def test_positive_zero_not_alternating():
    d = switch_crossing(figure_eight(), 0)
    assert_raises(NotGenerating, 'not alternating', positive_zero_test, d)
    assert_raises(TypeError, 'Expected', positive_zero_test, [1, 2])


def test_rouche_figure_eight():
    cert = rouche_test(figure_eight())
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['unit_present']
    assert cert.witnesses['pairs'] == 1


def test_rouche_trefoil():
    sd = series_decomposition(trefoil())
    cert = rouche_test(sd)
    assert cert.witnesses['unit_present']
    assert_verdict(cert, 'PASS', 'INAPPLICABLE')


def test_rouche_pair_not_positive():
    cert = rouche_test([LaurentPoly.one(), poly(1, -3, 1)])
    assert_verdict(cert, 'INAPPLICABLE')
    assert cert.witnesses['failed'][0]['pair'] == [0, 1]


def test_rouche_missing_unit():
    terms = [poly(1, -3, 1), poly(1, -3, 1)]
    assert_verdict(rouche_test(terms), 'INAPPLICABLE')
    assert_raises(MissingUnitPolynomial, 'constant 1', rouche_test, terms,
                  strict=True)
