# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest
import sympy

from knotxtend.diagram import unknot
from knotxtend.equivalence import realize_series
from knotxtend.invariants import alexander, conway, determinant, v2
from knotxtend.invariants.alexander import (arcs, alexander_to_conway,
                                           region_matrix)
from knotxtend.math import LaurentPoly
from knotxtend.data import (trefoil, figure_eight, knot, torus_2,
                            kinked_trefoil)
from knotxtend.utils import assert_raises
from knotxtend.utils.errors import MultiComponentUnsupported

TABLE = ['3_1', '4_1', '5_1', '5_2', '6_1', '6_2', '6_3', '7_1']


def test_trefoil():
    assert str(alexander(trefoil())) == '1*t^-1 + -1*t^0 + 1*t^1'
    assert str(conway(trefoil())) == '1*z^0 + 1*z^2'


def test_figure_eight():
    assert str(alexander(figure_eight())) == '-1*t^-1 + 3*t^0 + -1*t^1'


def test_twist_series_member():
    d = realize_series(figure_eight(), [2, 1])
    assert d.num_crossings == 6
    assert str(alexander(d)) == '-2*t^-1 + 5*t^0 + -2*t^1'
    assert determinant(d) == 9


def test_arcs():
    assert len(set(arcs(trefoil()).values())) == 3
    assert len(set(arcs(figure_eight()).values())) == 4


@pytest.mark.parametrize('name', TABLE)
def test_matrix_equals_skein(name):
    d = knot(name)
    assert alexander(d, method='matrix') == alexander(d, method='skein')
    assert conway(d, method='matrix') == conway(d, method='skein')


@pytest.mark.parametrize('name', TABLE)
def test_region_matrix_equals_fox(name):
    d = knot(name)
    assert alexander(d, method='region') == alexander(d, method='matrix')
    assert determinant(d, method='region') == determinant(d)


def test_region_matrix():
    t = sympy.Symbol('t')
    rows = region_matrix(trefoil(), t)
    assert len(rows) == 3
    assert all(len(row) == 5 for row in rows)
    assert all(sympy.expand(sum(row)) == 0 for row in rows)
    assert alexander(kinked_trefoil(), method='region') == \
        alexander(trefoil())
    assert alexander(unknot(), method='region') == LaurentPoly.one()


@pytest.mark.parametrize('name', TABLE)
def test_normalization(name):
    delta = alexander(knot(name))
    assert delta.evaluate(1) == 1
    assert delta == delta.substitute(-1)


@pytest.mark.parametrize('d, det, v', [(trefoil(), 3, 1),
                                       (figure_eight(), 5, -1),
                                       (unknot(), 1, 0),
                                       (knot('5_2'), 7, 2),
                                       (torus_2(5), 5, 3)])
def test_determinant_v2(d, det, v):
    assert determinant(d) == det
    assert v2(d) == v


def test_links_use_skein():
    d = torus_2(2)
    assert determinant(d) == 2
    assert_raises(MultiComponentUnsupported, 'needs a knot diagram',
                  alexander, d, method='matrix')
    assert_raises(MultiComponentUnsupported, 'needs a knot diagram', v2, d)


def test_alexander_to_conway():
    delta = LaurentPoly({1: 2, 0: -3, -1: 2})
    assert str(alexander_to_conway(delta)) == '1*z^0 + 2*z^2'
    assert_raises(ValueError, 'not a symmetric', alexander_to_conway,
                  LaurentPoly({1: 1}))


def test_unknown_method():
    assert_raises(ValueError, 'Unknown method', alexander, trefoil(),
                  method='seifert')
