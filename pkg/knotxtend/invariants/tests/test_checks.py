# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

import pytest

from knotxtend.diagram import seifert_state
from knotxtend.equivalence import t2_twist
from knotxtend.invariants import (regularization_check, bennequin_checks,
                                  slice_genus_bounds,
                                  positive_crossing_check, invariant_bundle)
from knotxtend.moves import random_unknot
from knotxtend.data import (trefoil, figure_eight, torus_2, kinked_trefoil,
                            kink, knot, knot_table)
from knotxtend.utils import assert_raises, assert_verdict
from knotxtend.utils.errors import InconsistentSeed


def test_regularization_trefoil():
    cert = regularization_check([trefoil()])
    assert_verdict(cert, 'PASS')
    assert cert.witnesses == {'n': -1, 'diagrams': 8}


def test_regularization_figure_eight():
    cert = regularization_check([figure_eight()])
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['n'] == 2


def test_regularization_negative_seed():
    # no positive crossing, so the seed is its own twist set
    cert = regularization_check([trefoil(-1)])
    assert cert.witnesses == {'n': 4, 'diagrams': 1}


def test_regularization_empty():
    cert = regularization_check([])
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['n'] is None


def test_regularization_inconsistent():
    seeds = [trefoil(), trefoil(-1)]
    cert = regularization_check(seeds)
    assert_verdict(cert, 'FAIL')
    assert cert.witnesses['values'] == [-1, 4]
    assert_raises(InconsistentSeed, 'takes the values -1, 4',
                  regularization_check, seeds, strict=True)


def test_slice_genus_bounds():
    b = slice_genus_bounds(trefoil())
    assert b == {'signature': 1, 'rudolph': 1, 'classes': 1}
    b = slice_genus_bounds(figure_eight())
    assert b['signature'] == Fraction(0)
    assert b['rudolph'] == 0
    assert b['classes'] == 0


def test_bennequin_trefoil():
    cert = bennequin_checks(trefoil())
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['genus'] == 1
    assert cert.witnesses['source'] == 'alternating'


def test_bennequin_figure_eight():
    assert_verdict(bennequin_checks(figure_eight()), 'PASS')


def test_bennequin_needs_genus():
    assert_verdict(bennequin_checks(kinked_trefoil()), 'INAPPLICABLE')
    cert = bennequin_checks(kinked_trefoil(), genus=1)
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['s_minus'] == 1


def test_bennequin_unknot_diagram():
    # c_minus >= g(D) on any unknot diagram
    cert = bennequin_checks(kink(-1), genus=0)
    assert_verdict(cert, 'PASS')


@pytest.mark.parametrize('name', [n for n in knot_table()['name']
                                  if n != '0_1'])
def test_bennequin_table(name):
    assert_verdict(bennequin_checks(knot(name)), 'PASS')


def _check_unknot(d):
    assert d.c_minus >= seifert_state(d).genus
    assert_verdict(bennequin_checks(d, genus=0), 'PASS')


@pytest.mark.parametrize('seed', range(4))
def test_bennequin_random_unknots(seed):
    _check_unknot(random_unknot(6, seed=seed, max_negative=3))


@pytest.mark.slow
def test_bennequin_unknot_sample():
    for seed in range(1000):
        d = random_unknot(16, seed=seed)
        if d.num_crossings:
            _check_unknot(d)


def test_positive_crossing_bound():
    cert = positive_crossing_check(t2_twist(trefoil(), 0))
    assert_verdict(cert, 'PASS')
    assert cert.witnesses == {'c': 5, 'g': 1, 'v2': 2}
    assert_verdict(positive_crossing_check(torus_2(5)), 'PASS')


def test_positive_crossing_inapplicable():
    assert_verdict(positive_crossing_check(trefoil()), 'INAPPLICABLE')
    assert_verdict(positive_crossing_check(figure_eight()), 'INAPPLICABLE')
    assert_verdict(positive_crossing_check(kinked_trefoil()),
                   'INAPPLICABLE')


def test_invariant_bundle():
    b = invariant_bundle(figure_eight())
    assert b['c'] == 4
    assert b['determinant'] == 5
    assert b['signature'] == 0
    assert b['v2'] == -1
    assert b['mwf'] == 3
    assert b['alexander'] == '-1*t^-1 + 3*t^0 + -1*t^1'


def test_invariant_bundle_link():
    b = invariant_bundle(torus_2(2))
    assert b['n'] == 2
    assert b['v2'] is None
    assert b['signature'] is None
    assert b['determinant'] == 2
