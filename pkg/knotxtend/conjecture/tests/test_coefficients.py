# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

import pytest

from knotxtend.conjecture import (logconcavity_test, trapezoidal_test,
                                  os_inequalities, ratio_bounds,
                                  binomial_ratio_check, series_decomposition)
from knotxtend.invariants import alexander, signature
from knotxtend.math import LaurentPoly
from knotxtend.data import trefoil, figure_eight, knot
from knotxtend.utils import assert_raises, assert_verdict

TABLE = ['3_1', '4_1', '5_1', '5_2', '6_1', '6_2', '6_3', '7_1']


def alternating(*abs_coeffs):
    return LaurentPoly.from_coefficients(
        [c if k % 2 == 0 else -c for k, c in enumerate(abs_coeffs)])


def test_logconcavity_figure_eight():
    cert = logconcavity_test(alexander(figure_eight()))
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['coefficients'] == [1, 3, 1]


def test_logconcavity_fails():
    cert = logconcavity_test(alternating(1, 1, 3, 1, 1))
    assert_verdict(cert, 'FAIL')
    assert cert.witnesses['failed'] == ['k = 1', 'k = 3']


def test_logconcavity_equality():
    assert_verdict(logconcavity_test(alternating(1, 1, 1, 1, 1)), 'PASS')
    # 2^2 = 1 * 4 with unequal neighbours
    assert_verdict(logconcavity_test(alternating(1, 2, 4, 2, 1)), 'FAIL')


def test_not_alternating():
    p = LaurentPoly.from_coefficients([1, 3, 1])
    assert_verdict(logconcavity_test(p), 'INAPPLICABLE')
    assert_verdict(trapezoidal_test(p), 'INAPPLICABLE')


def test_trapezoidal():
    cert = trapezoidal_test(alternating(1, 3, 5, 5, 5, 3, 1))
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['n'] == 2
    assert cert.witnesses['g'] == 3
    cert = trapezoidal_test(alternating(1, 3, 2, 3, 1))
    assert_verdict(cert, 'FAIL')


def test_trapezoidal_signature():
    delta = alexander(trefoil())
    assert_verdict(trapezoidal_test(delta, sigma=2), 'PASS')
    cert = trapezoidal_test(alternating(1, 3, 5, 5, 5, 3, 1), sigma=0)
    assert_verdict(cert, 'FAIL')
    assert cert.witnesses['failed'] == ['n >= g - |sigma| / 2']


@pytest.mark.parametrize('name', TABLE)
def test_table_coefficients(name):
    d = knot(name)
    delta, sigma = alexander(d), signature(d)
    assert_verdict(logconcavity_test(delta), 'PASS')
    assert_verdict(trapezoidal_test(delta, sigma), 'PASS')
    assert_verdict(os_inequalities(delta, sigma), 'PASS')


def test_os_five_one():
    delta = alternating(1, 1, 1, 1, 1)
    cert = os_inequalities(delta, 4)
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['values'] == [[0, 1, 1], [1, -1, -1]]
    assert_verdict(os_inequalities(delta, -4), 'PASS')


def test_os_figure_eight():
    cert = os_inequalities(alexander(figure_eight()), 0)
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['g'] == 1
    assert_raises(ValueError, 'even', os_inequalities,
                  alexander(figure_eight()), 1)


def test_ratio_bounds_trefoil():
    assert ratio_bounds(trefoil(), 1) == (Fraction(1), Fraction(2))
    assert_raises(ValueError, 'must lie in 1..2', ratio_bounds, trefoil(), 3)


def test_ratio_bounds_sources():
    sd = series_decomposition(figure_eight(), check=0)
    low, high = ratio_bounds(sd, 1)
    assert low <= 3 <= high
    assert ratio_bounds(sd.terms, 1) == (low, high)


def test_ratio_bounds_constant():
    terms = [LaurentPoly.from_coefficients([2, -2]) * 3]
    assert ratio_bounds(terms, 1) == (Fraction(1), Fraction(1))


def test_binomial_ratio():
    cert = binomial_ratio_check(alexander(knot('5_1')), 4)
    assert_verdict(cert, 'PASS')
    assert_verdict(binomial_ratio_check(alexander(figure_eight()), 0),
                   'INAPPLICABLE')
