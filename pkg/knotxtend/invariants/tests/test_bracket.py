# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

import pytest

from knotxtend.diagram import Diagram, unknot, mirror
from knotxtend.invariants import kauffman_bracket, jones
from knotxtend.math import LaurentPoly
from knotxtend.data import trefoil, figure_eight, kink, torus_2, knot
from knotxtend.utils import assert_raises
from knotxtend.utils.errors import SizeCap


def test_unknot():
    assert kauffman_bracket(unknot()) == LaurentPoly.one(var='A')
    assert jones(unknot()) == LaurentPoly.one()


def test_unlink():
    d = Diagram([], [], free_loops=2)
    assert str(kauffman_bracket(d)) == '-1*A^-2 + -1*A^2'


def test_kinks():
    assert str(kauffman_bracket(kink(1))) == '-1*A^3'
    assert str(kauffman_bracket(kink(-1))) == '-1*A^-3'
    assert jones(kink(1)) == jones(kink(-1)) == LaurentPoly.one()


def test_trefoil():
    assert str(jones(trefoil())) == '1*t^1 + 1*t^3 + -1*t^4'
    assert str(jones(trefoil(-1))) == '-1*t^-4 + 1*t^-3 + 1*t^-1'


def test_figure_eight():
    v = jones(figure_eight())
    assert v.coefficients() == [1, -1, 1, -1, 1]
    assert (v.mindeg, v.maxdeg) == (-2, 2)


@pytest.mark.parametrize('name', ['3_1', '4_1', '5_1', '5_2', '6_1', '6_2',
                                  '6_3', '7_1'])
def test_mirror_inverts_variable(name):
    d = knot(name)
    assert jones(mirror(d)) == jones(d).substitute(-1)


@pytest.mark.parametrize('name', ['3_1', '4_1', '5_2', '6_2', '7_1'])
def test_span_is_crossing_number(name):
    d = knot(name)
    assert jones(d).span == d.num_crossings


def test_hopf_link_half_exponents():
    v = jones(torus_2(2))
    assert not v.is_integral()
    assert v.coeff(Fraction(1, 2)) == -1
    assert v.coeff(Fraction(5, 2)) == -1
    assert len(v.terms()) == 2


def test_cap():
    assert_raises(SizeCap, 'capped at 2 crossings', kauffman_bracket,
                  trefoil(), cap=2)
