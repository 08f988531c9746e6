# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.conjecture import mwf_sharpness_test, seifert_class_sets
from knotxtend.diagram import switch_crossing
from knotxtend.data import trefoil, figure_eight, knot
from knotxtend.utils import assert_raises, assert_verdict
from knotxtend.utils.errors import NotGenerating


def test_trefoil():
    cert = mwf_sharpness_test(trefoil())
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['mwf'] == 2
    assert cert.witnesses['mpb'] == 2
    assert cert.witnesses['core'] == []
    assert cert.witnesses['special']
    assert cert.witnesses['sets'] == 1


def test_seifert_class_sets_empty_first():
    sets = seifert_class_sets(figure_eight())
    assert sets[0] == ()
    assert all(len(s) <= 2 for s in sets)


def test_not_alternating():
    d = switch_crossing(figure_eight(), 0)
    assert_raises(NotGenerating, 'alternating', mwf_sharpness_test, d)


@pytest.mark.slow
def test_figure_eight():
    cert = mwf_sharpness_test(figure_eight())
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['mwf'] == 3
    assert cert.witnesses['core'] == []


@pytest.mark.slow
@pytest.mark.parametrize('name', ['5_1', '6_2', '6_3'])
def test_genus_two(name):
    assert_verdict(mwf_sharpness_test(knot(name)), 'PASS')
