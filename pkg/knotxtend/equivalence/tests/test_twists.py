# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.diagram import seifert_state, unknot, canonical_code
from knotxtend.equivalence import (t2_twist, realize_series, TwistVector,
                                   x_star, equivalence_classes)
from knotxtend.data import trefoil, figure_eight, knot
from knotxtend.utils import assert_raises
from knotxtend.utils.errors import (UnknownCrossing, DimensionMismatch,
                                    ZeroOnSingleton, MalformedCode,
                                    NotGenerating)


@pytest.mark.parametrize('x', [0, 1, 2])
def test_twist_trefoil(x):
    d = trefoil()
    t = t2_twist(d, x)
    before, after = seifert_state(d), seifert_state(t)
    assert t.num_crossings == 5
    assert after.genus == before.genus == 1
    assert after.s == before.s + 2
    assert t.num_components == 1
    assert t.signs[3] == t.signs[4] == d.signs[x]
    assert t.is_alternating()
    ec = equivalence_classes(t)
    cls = ec.sim[ec.sim_class_of(x)]
    assert sorted(cls) == sorted([x, 3, 4])


def test_twist_negative_crossing():
    d = figure_eight()
    x = d.signs.index(-1)
    t = t2_twist(d, x)
    assert t.signs[4] == t.signs[5] == -1
    assert t.writhe == d.writhe - 2
    assert seifert_state(t).genus == 1
    ec = equivalence_classes(t)
    assert sorted(ec.sizes) == [2, 4]


def test_twist_keeps_other_classes():
    d = knot('5_2')
    ec = equivalence_classes(d)
    x = ec.sim[0][0]
    t = t2_twist(d, x)
    sizes = list(ec.sizes)
    sizes[0] += 2
    assert sorted(equivalence_classes(t).sizes) == sorted(sizes)


def test_twist_unknown_crossing():
    assert_raises(UnknownCrossing, 'does not exist', t2_twist, trefoil(), 3)


def test_identity_vectors():
    assert realize_series(figure_eight(), [1, 1]) == figure_eight()
    assert realize_series(trefoil(), (1, 1, 1)) == trefoil()


def test_series_twist_knot():
    d = realize_series(figure_eight(), TwistVector(figure_eight(), [2, 1]))
    assert d.num_crossings == 6
    assert d.is_alternating()
    assert seifert_state(d).genus == 1
    assert sorted(equivalence_classes(d).sizes) == [2, 4]


def test_series_signs():
    d = realize_series(trefoil(), [-1, 1, 1])
    assert d.num_crossings == 5
    assert d.c_minus == 3
    d = realize_series(figure_eight(), [0, 1])
    assert d.num_crossings == 4
    assert d.writhe != 0
    d = realize_series(figure_eight(), [-2, 1])
    assert d.num_crossings == 6
    assert sorted(equivalence_classes(d).sizes) == [2, 4]


def test_series_errors():
    assert_raises(DimensionMismatch, 'has 2 ~-classes', realize_series,
                  figure_eight(), [1, 1, 1])
    assert_raises(ZeroOnSingleton, 'undefined', realize_series, trefoil(),
                  [0, 1, 1])
    with pytest.raises(NotGenerating):
        realize_series(t2_twist(trefoil(), 0), [1, 1, 1])


def test_twist_vector_text():
    v = TwistVector(figure_eight(), [2, 1])
    assert str(v) == '4 6 8 2|2,1'
    assert TwistVector.from_string(str(v)) == v
    assert_raises(MalformedCode, 'Expected', TwistVector.from_string,
                  '4 6 8 2')
    assert_raises(MalformedCode, 'integers', TwistVector.from_string,
                  '4 6 8 2|a,1')


def test_x_star():
    out = x_star(trefoil())
    assert len(out) == 8
    assert sorted(d.num_crossings for d in out) == [3, 5, 5, 5, 7, 7, 7, 9]
    assert out[0] == trefoil()
    assert len(x_star(figure_eight())) == 2
    assert x_star(unknot()) == [unknot()]


def test_x_star_twists_are_symmetric():
    out = x_star(trefoil())
    fives = set(canonical_code(d) for d in out if d.num_crossings == 5)
    assert len(fives) == 1
