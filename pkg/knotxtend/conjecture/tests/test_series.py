# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.conjecture import series_decomposition, reduce_term
from knotxtend.equivalence import t2_twist
from knotxtend.math import LaurentPoly
from knotxtend.data import trefoil, figure_eight
from knotxtend.utils import assert_raises
from knotxtend.utils.errors import NotGenerating, DimensionMismatch


@pytest.fixture(scope='module')
def eight():
    return series_decomposition(figure_eight())


def test_reduce_term():
    p = LaurentPoly.from_coefficients([1, -3, 1])
    one_minus_t = LaurentPoly({0: 1, 1: -1})
    assert reduce_term(one_minus_t ** 2 * p) == (p, 2)
    assert reduce_term(LaurentPoly.from_coefficients([-2, 2])) == \
        (LaurentPoly.one(), 1)
    assert reduce_term(p * -3) == (p, 0)
    assert_raises(ValueError, 'zero polynomial', reduce_term, LaurentPoly())


def test_figure_eight_reduced(eight):
    assert [str(p) for p in eight.reduced] == ['1*t^0 + -3*t^1 + 1*t^2',
                                               '1*t^0']
    assert eight.genus == 1
    assert len(eight.classes) == 2
    assert eight.exponents == [0, 2]


def test_frame_polynomial(eight):
    assert eight.frame_polynomial() == \
        LaurentPoly.from_coefficients([1, -3, 1])
    assert eight.subsets[0] == ()
    assert eight.equal_signs


def test_consistency(eight):
    assert len(eight.consistency) == 5
    assert eight.consistent


def test_member(eight):
    assert eight.member_polynomial((2, 1)) == \
        LaurentPoly.from_coefficients([2, -5, 2])
    assert eight.member_polynomial((1, 1)) == eight.frame_polynomial()
    assert eight.check_member((2, 1))
    assert eight.check_member((3, 2))
    assert eight.member_diagram((2, 1)).num_crossings == 6


def test_coefficients(eight):
    assert eight.coefficients((1, 1)) == [1] + [0] * (len(eight) - 1)
    assert_raises(DimensionMismatch, 'vector has 1 entries',
                  eight.coefficients, (2,))
    assert_raises(ValueError, '>= 1', eight.member_diagram, (0, 1))


def test_trefoil_contains_unit():
    sd = series_decomposition(trefoil())
    assert LaurentPoly.one() in sd.reduced
    assert sd.consistent


def test_not_generating():
    d = t2_twist(figure_eight(), 0)
    assert_raises(NotGenerating, 'more than 2', series_decomposition, d)
    sd = series_decomposition(d, check=2, require_generating=False)
    assert sd.consistent
