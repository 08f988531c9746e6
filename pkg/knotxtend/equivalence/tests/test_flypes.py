# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.diagram import seifert_state, canonical_code
from knotxtend.equivalence import (flypes_at, flyping_degree, x_plus,
                                   equivalence_classes)
from knotxtend.data import trefoil, figure_eight, torus_2, knot


def test_trefoil_has_no_nontrivial_flype():
    d = trefoil()
    for x in range(3):
        assert flypes_at(d, x) == []


def test_trefoil_trivial_flypes_give_trefoil():
    d = trefoil()
    found = flypes_at(d, 0, nontrivial=False)
    assert found
    for f in found:
        assert f.kind in ('A', 'B')
        assert canonical_code(f.diagram, symmetric=True) == \
            canonical_code(d, symmetric=True)


def test_figure_eight_flypes():
    d = figure_eight()
    found = [f for x in range(4) for f in flypes_at(d, x, nontrivial=False)]
    assert found
    for f in found:
        assert f.diagram.num_crossings == 4
        assert f.diagram.writhe == d.writhe
        assert f.diagram.is_alternating()
        assert seifert_state(f.diagram).genus == 1
        assert len(f.tangle) == 1


@pytest.mark.parametrize('name', ['4_1', '5_2', '6_2'])
def test_flype_is_involution(name):
    d = knot(name)
    original = canonical_code(d)
    for x in range(d.num_crossings):
        for f in flypes_at(d, x, nontrivial=False):
            back = [canonical_code(g.diagram)
                    for g in flypes_at(f.diagram, x, nontrivial=False)]
            assert original in back


@pytest.mark.parametrize('name', ['5_2', '6_1', '6_2', '6_3', '7_1'])
def test_flypes_keep_crossings_and_genus(name):
    d = knot(name)
    g = seifert_state(d).genus
    for x in range(d.num_crossings):
        for f in flypes_at(d, x, nontrivial=False):
            assert f.diagram.num_crossings == d.num_crossings
            assert f.diagram.writhe == d.writhe
            assert seifert_state(f.diagram).genus == g


def test_degree_of_inactive_classes():
    d = trefoil()
    for cls in equivalence_classes(d).sim:
        assert flyping_degree(d, cls) == 1
    d = figure_eight()
    for cls in equivalence_classes(d).sim:
        assert flyping_degree(d, cls) == 1
    d = torus_2(9)
    assert flyping_degree(d, [0]) == 1


@pytest.mark.parametrize('name', ['3_1', '4_1', '5_2', '6_1', '6_2',
                                  '6_3', '7_1'])
def test_degree_at_most_genus(name):
    d = knot(name)
    g = seifert_state(d).genus
    for cls in equivalence_classes(d).sim:
        assert 1 <= flyping_degree(d, cls) <= g


@pytest.mark.slow
def test_x_plus_trefoil():
    out = x_plus(trefoil())
    assert set(d.num_crossings for d in out) == {3, 5, 7, 9}
    for d in out:
        assert seifert_state(d).genus == 1
        for cls in equivalence_classes(d).sim:
            assert len(set(d.signs[c] for c in cls)) == 1
