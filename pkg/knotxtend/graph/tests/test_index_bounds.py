# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.graph import mp_bounds, psim_check, ci_check, build_graph
from knotxtend.data import trefoil, figure_eight, torus_2, knot
from knotxtend.utils import assert_verdict
from knotxtend.utils.errors import NotSpecial


def test_trefoil_report():
    r = mp_bounds(trefoil())
    assert (r.ind, r.ind0, r.ind_b) == (0, 0, 0)
    assert r.mpb == 2
    assert (r.q1, r.q2) == (4, 2)
    assert r.core == frozenset()
    assert not r.discrepancy


def test_figure_eight_report():
    assert mp_bounds(figure_eight()).mpb == 3


def test_torus_report():
    r = mp_bounds(torus_2(9))
    assert r.mpb == 2
    assert r.to_dict()['core'] == []


@pytest.mark.parametrize('name', ['5_2', '6_1', '6_2', '6_3'])
def test_report_invariants(name):
    r = mp_bounds(knot(name))
    assert r.ind_plus + r.ind_minus >= r.ind
    assert r.ind <= r.ind0
    assert r.ind_b <= r.ind0
    assert r.q2 <= r.q1


def test_psim_trefoil():
    cert = psim_check(trefoil())
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['mwf'] == 2
    assert cert.witnesses['shortcut']


def test_psim_torus():
    cert = psim_check(torus_2(9))
    assert_verdict(cert, 'PASS')
    assert cert.witnesses['t'] + cert.witnesses['chi'] == 2
    assert cert.witnesses['shortcut']


def test_psim_needs_special():
    with pytest.raises(NotSpecial):
        psim_check(figure_eight())


def test_ci():
    cert = ci_check(build_graph(trefoil()))
    assert_verdict(cert, 'PASS')
    assert cert.witnesses == {'ind': 0, 'v': 2, 'e': 3}
    assert_verdict(ci_check(torus_2(5)), 'PASS')
    # 4 spanning trees
    assert_verdict(ci_check(figure_eight()), 'INAPPLICABLE')
