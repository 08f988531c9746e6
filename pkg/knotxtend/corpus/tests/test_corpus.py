# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.corpus import Corpus
from knotxtend.diagram import mirror
from knotxtend.file_io import write_codes, dump_diagram
from knotxtend.data import trefoil, figure_eight, knot
from knotxtend.utils import assert_raises


def small():
    c = Corpus(name='small')
    c.add('3_1', trefoil())
    c.add('4_1', figure_eight())
    c.add('5_1', knot('5_1'))
    return c


def test_add_and_codes():
    c = small()
    assert len(c) == 3
    assert c.names == ['3_1', '4_1', '5_1']
    assert c.codes[:2] == ['4 6 2', '4 6 8 2']
    assert c[1].diagram == figure_eight()
    assert c.collisions == []


def test_duplicate_entry():
    c = small()
    assert_raises(ValueError, 'already in the corpus', c.add, '3_1',
                  trefoil())
    c.add('trefoil', trefoil(), check=False)
    assert len(c) == 4


def test_mirror_collision():
    c = small()
    with pytest.warns(UserWarning, match='possible mutants'):
        c.add('3_1m', mirror(trefoil()))
    assert c.collisions == [('3_1', '3_1m')]
    assert len(c) == 4


def test_from_file(tmp_path):
    path = str(tmp_path / 'knots.dt')
    write_codes([('3_1', trefoil()), ('4_1', figure_eight())], path)
    c = Corpus.from_file(path)
    assert c.names == ['3_1', '4_1']
    assert c[0].source == path
    dump_diagram(knot('5_2'), str(tmp_path / 'five.json'))
    d = Corpus.from_directory(str(tmp_path))
    assert len(d) == 3
    assert d[0].source.endswith('five.json')


def test_filter_and_frame():
    c = small().filter(lambda d: d.num_crossings < 5)
    assert c.names == ['3_1', '4_1']
    df = c.to_frame(c.bundles())
    assert list(df['crossings']) == [3, 4]
    assert list(df['determinant']) == [3, 5]
    assert 'jones' in df.columns


def test_bundles_parallel():
    c = small()
    assert c.bundles(n_jobs=2) == c.bundles()
