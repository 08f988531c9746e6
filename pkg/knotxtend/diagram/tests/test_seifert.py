# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

from knotxtend.diagram import (seifert_state, basic_stats, unknot,
                               smooth_crossing, Diagram)
from knotxtend.data import trefoil, figure_eight, torus_2, kink
from knotxtend.moves import BraidWord


def test_trefoil_state():
    st = seifert_state(trefoil())
    assert st.s == 2
    assert st.chi == -1
    assert st.genus == 1
    assert st.is_special()
    assert st.s_minus == 0


def test_figure_eight_state():
    st = seifert_state(figure_eight())
    assert (st.s, st.chi, st.genus) == (3, -1, 1)
    assert st.num_separating == 1
    sep = st.separating.index(True)
    assert st.runs[sep] == 4
    assert st.index[sep] == 2
    assert st.depth[sep] == 0
    assert [st.index[k] for k in range(st.s) if k != sep] == [0, 0]


def test_nested_separating_circles():
    d = BraidWord.from_string('5: 1 -2 3 -4 1 -2 3 -4').closure()
    st = seifert_state(d)
    assert st.s == 5
    assert st.num_separating == 3
    assert sorted(st.index) == [0, 0, 2, 2, 2]
    assert sorted(st.depth[k] for k in range(st.s)
                  if st.separating[k]) == [0, 0, 1]


def test_unknot_state():
    st = seifert_state(unknot())
    assert (st.s, st.chi, st.genus) == (1, 1, 0)
    assert st.index == [0]


def test_kink_state():
    st = seifert_state(kink())
    assert (st.s, st.chi, st.genus) == (2, 1, 0)


def test_every_crossing_joins_two_circles():
    for d in [trefoil(), figure_eight(), torus_2(5)]:
        st = seifert_state(d)
        for a, b in st.crossing_to_circles:
            assert a != b
        assert sum(st.valence) == 2 * d.num_crossings


def test_link_genus():
    hopf = smooth_crossing(trefoil(), 0)
    st = seifert_state(hopf)
    assert hopf.num_components == 2
    assert st.chi == 0
    assert st.genus == Fraction(0)
    st = seifert_state(torus_2(4))
    assert st.genus == 1


def test_basic_stats():
    keys = ['c', 'c_plus', 'c_minus', 'w', 's', 's_minus', 'chi', 'g', 'n']
    got = basic_stats(trefoil())
    assert [got[k] for k in keys] == [3, 3, 0, 3, 2, 0, -1, 1, 1]
    got = basic_stats(trefoil(-1))
    assert [got[k] for k in keys] == [3, 0, 3, -3, 2, 2, -1, 1, 1]
    got = basic_stats(figure_eight())
    assert (got['c_plus'], got['c_minus'], got['w']) == (2, 2, 0)


def test_free_loops_are_circles():
    k = kink()
    d = Diagram(k.crossings, k.signs, free_loops=1)
    st = seifert_state(d)
    assert st.s == 3
    assert st.n == 2
