# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import numpy as np
import pytest

from knotxtend.equivalence import (equivalence_classes, linking_matrix,
                                   is_generating, t2_twist)
from knotxtend.equivalence.classes import is_mixed
from knotxtend.data import trefoil, figure_eight, torus_2, knot
from knotxtend.utils.errors import MultiComponentUnsupported


def test_trefoil_all_linked():
    L = linking_matrix(trefoil())
    assert L.shape == (3, 3)
    np.testing.assert_array_equal(L, ~np.eye(3, dtype=bool))


def test_trefoil_classes():
    ec = equivalence_classes(trefoil())
    assert ec.t == 3
    assert ec.sizes == [1, 1, 1]
    assert ec.twist == [[0, 1, 2]]
    assert ec.ssim == [[0, 1, 2]]
    assert ec.seifert == [[0, 1, 2]]


def test_figure_eight_classes():
    d = figure_eight()
    ec = equivalence_classes(d)
    assert ec.t == 2
    assert ec.sizes == [2, 2]
    for cls in ec.sim:
        assert not is_mixed(d, cls)
        p, q = cls
        assert not ec.linked[p, q]


def test_torus_nine_classes():
    ec = equivalence_classes(torus_2(9))
    assert ec.t == 9
    assert ec.sizes == [1] * 9
    ec = equivalence_classes(knot('9_1'))
    assert ec.t == 9


def test_links_only_get_seifert_classes():
    hopf = torus_2(2)
    with pytest.raises(MultiComponentUnsupported):
        equivalence_classes(hopf)
    ec = equivalence_classes(hopf, seifert_only=True)
    assert ec.seifert == [[0, 1]]
    assert ec.sim is None


@pytest.mark.parametrize('name', ['3_1', '4_1', '5_2', '6_1', '6_2',
                                  '6_3', '7_1'])
def test_partition_properties(name):
    d = knot(name)
    ec = equivalence_classes(d)
    n = d.num_crossings
    for partition in (ec.twist, ec.sim, ec.ssim, ec.seifert):
        flat = sorted(c for cls in partition for c in cls)
        assert flat == list(range(n))
    twist_of = {c: i for i, cls in enumerate(ec.twist) for c in cls}
    seifert_of = {c: i for i, cls in enumerate(ec.seifert) for c in cls}
    for cls in ec.sim + ec.ssim:
        assert len(set(twist_of[c] for c in cls)) == 1
    for cls in ec.sim:
        for p in cls:
            for q in cls:
                assert not ec.linked[p, q]
    for cls in ec.ssim:
        assert len(set(seifert_of[c] for c in cls)) == 1


def test_is_generating():
    assert is_generating(trefoil())
    assert is_generating(figure_eight())
    assert not is_generating(t2_twist(trefoil(), 0))
    assert not is_generating(t2_twist(figure_eight(), 0))
