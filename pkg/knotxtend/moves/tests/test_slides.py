# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.diagram import connected_sum, canonical_code
from knotxtend.invariants import jones
from knotxtend.moves import factor_slide, factor_cuts, apply_move
from knotxtend.data import trefoil, figure_eight
from knotxtend.utils import assert_raises
from knotxtend.utils.errors import NotACut


@pytest.fixture
def composite():
    return connected_sum(trefoil(), figure_eight())


def test_cuts(composite):
    cuts = factor_cuts(composite)
    assert len(cuts) == 1
    e, f = cuts[0]
    assert e != f


@pytest.mark.parametrize('steps', [1, 2, -1, 5])
def test_slide_preserves_jones(composite, steps):
    slid = factor_slide(composite, factor_cuts(composite)[0], steps)
    assert slid.num_crossings == 7
    assert slid.is_connected()
    assert jones(slid) == jones(composite)


def test_slide_back(composite):
    slid = factor_slide(composite, factor_cuts(composite)[0], 1)
    back = factor_slide(slid, factor_cuts(slid)[0], -1)
    assert canonical_code(back) == canonical_code(composite)


def test_apply_move(composite):
    cut = factor_cuts(composite)[0]
    out = apply_move(composite, 'factor_slide', {'cut': list(cut),
                                                 'steps': 1})
    assert canonical_code(out) == canonical_code(
        factor_slide(composite, cut, 1))


def test_prime_has_no_cut():
    d = trefoil()
    assert factor_cuts(d) == []
    e = d.edges[0]
    assert_raises(NotACut, 'do not split', factor_slide, d,
                  (e, d.next_edge(e)))
    assert_raises(NotACut, 'distinct edges', factor_slide, d, (e, e))


def test_unknown_move_kind():
    assert_raises(ValueError, 'cannot be replayed', apply_move, trefoil(),
                  'flype', {})
