# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

import pytest

from knotxtend.conjecture import (series_logconcavity_certify,
                                  reduce_candidates, hull_in_region)
from knotxtend.math import LaurentPoly
from knotxtend.data import trefoil, figure_eight, knot
from knotxtend.utils import assert_raises, assert_verdict


def poly(*coeffs):
    return LaurentPoly.from_coefficients(list(coeffs))


def test_reduce_degree_two():
    polys = [poly(1, -3, 1), poly(2, -5, 2), poly(1, -4, 1), poly(1)]
    kept = reduce_candidates(polys)
    assert kept == [LaurentPoly.one(), poly(1, -4, 1), poly(2, -5, 2)]


def test_reduce_degree_four():
    polys = [poly(1, -2, 3, -2, 1), poly(1, -4, 6, -4, 1),
             poly(2, -6, 9, -6, 2)]
    kept = reduce_candidates(polys)
    assert len(kept) == 2
    assert poly(2, -6, 9, -6, 2) not in kept
    fast = reduce_candidates(polys, mode='fast')
    assert len(fast) == 4
    assert poly(1, -4, 3, -4, 1) in fast


def test_reduce_unknown_mode():
    assert_raises(ValueError, 'Unknown mode', reduce_candidates, [], 'slow')


def test_hull_in_region():
    inside, hull, violations = hull_in_region([(1, 1), (2, 3)])
    assert inside
    assert hull == [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(3))]
    inside, _, violations = hull_in_region([(1, 1), (3, 9)])
    assert not inside
    assert violations[0]['min'] == -1


def test_hull_degenerate():
    assert hull_in_region([(2, 4)])[0]
    assert not hull_in_region([(1, 2)])[0]
    inside, _, violations = hull_in_region([(-1, 0), (1, 0)])
    assert not inside
    assert violations[0] == {'vertex': [Fraction(-1), Fraction(0)]}


def test_hull_triangle():
    inside, hull, _ = hull_in_region([(2, 1), (3, 1), (2, 3), (Fraction(5, 2),
                                                              Fraction(3, 2))])
    assert inside
    assert len(hull) == 3


def test_figure_eight():
    cert = series_logconcavity_certify(figure_eight())
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['genus'] == 1
    assert cert.witnesses['kept'] == 2


def test_trefoil():
    assert_verdict(series_logconcavity_certify(trefoil()), 'PASS')
    assert_verdict(series_logconcavity_certify(trefoil(), mode='fast'),
                   'PASS')


@pytest.mark.slow
@pytest.mark.parametrize('name', ['5_1', '6_2', '6_3'])
def test_genus_two(name):
    cert = series_logconcavity_certify(knot(name))
    assert cert.witnesses['genus'] == 2
    assert_verdict(cert, 'PASS', 'INAPPLICABLE')
