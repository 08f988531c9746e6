# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.diagram import unknot
from knotxtend.equivalence import (generator_bounds_check,
                                   generator_crossing_bound, class_bound)
from knotxtend.equivalence.bounds import signature_defect
from knotxtend.data import trefoil, figure_eight, torus_2, knot, kink
from knotxtend.utils import assert_verdict
from knotxtend.utils.errors import MultiComponentUnsupported


def test_bound_tables():
    assert class_bound(0) == 1
    assert class_bound(-1) == 3
    assert generator_crossing_bound(-1, 1) == 4
    assert generator_crossing_bound(0, 2) == 2
    assert generator_crossing_bound(-2, 4) == 12
    assert generator_crossing_bound(-7, 1) == 33


def test_trefoil_bounds():
    cert = generator_bounds_check(trefoil())
    assert_verdict(cert, 'PASS')
    w = cert.witnesses
    assert (w['t'], w['chi'], w['c'], w['generating']) == (3, -1, 3, True)
    assert w['k'] == 0
    assert any('t <= -3chi - 3k/2' in p for p in cert.provenance)


def test_torus_nine_bounds():
    cert = generator_bounds_check(torus_2(9))
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['t'] == 9
    assert cert.witnesses['g'] == 4
    assert any('10g - 7' in p for p in cert.provenance)


def test_figure_eight_bounds():
    cert = generator_bounds_check(figure_eight())
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['t'] == 2
    assert signature_defect(figure_eight()) < 0


@pytest.mark.parametrize('name', ['5_2', '6_1', '6_2', '6_3', '7_1'])
def test_table_knots_pass(name):
    assert_verdict(generator_bounds_check(knot(name)), 'PASS')


def test_positive_chi_is_inapplicable():
    assert_verdict(generator_bounds_check(unknot()), 'INAPPLICABLE')
    assert_verdict(generator_bounds_check(kink()), 'INAPPLICABLE')


def test_links_are_rejected():
    with pytest.raises(MultiComponentUnsupported):
        generator_bounds_check(torus_2(4))
