# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from knotxtend.utils import (check_crossing, check_size, check_knot,
                             check_connected, assert_raises)
from knotxtend.utils.errors import (UnknownCrossing, SizeCap,
                                    MultiComponentUnsupported,
                                    DisconnectedDiagram)
from knotxtend.data import trefoil, torus_2
from knotxtend.diagram import Diagram, connected_sum


def test_check_crossing():
    check_crossing(trefoil(), 2)
    assert_raises(UnknownCrossing, 'Crossing 3 does not exist',
                  check_crossing, trefoil(), 3)
    assert_raises(UnknownCrossing, None, check_crossing, trefoil(), -1)


def test_check_size():
    check_size(trefoil(), None, 'x')
    check_size(trefoil(), 3, 'x')
    assert_raises(SizeCap, 'x is capped at 2 crossings. Got 3.',
                  check_size, trefoil(), 2, 'x')


def test_check_knot():
    check_knot(trefoil(), 'x')
    assert_raises(MultiComponentUnsupported, 'Got 2 components',
                  check_knot, torus_2(2), 'x')


def test_check_connected():
    check_connected(connected_sum(trefoil(), trefoil()), 'x')
    t = trefoil()
    d = Diagram(t.crossings, t.signs, free_loops=1)
    assert_raises(DisconnectedDiagram, 'x needs a connected diagram',
                  check_connected, d, 'x')
