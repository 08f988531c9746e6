# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from knotxtend.diagram import canonical_code
from knotxtend.file_io import read_codes, write_codes, format_code
from knotxtend.data import trefoil, figure_eight
from knotxtend.utils import assert_raises
from knotxtend.utils.errors import MalformedCode


def test_read_names():
    entries = read_codes(['# small knots', '3_1: 4 6 2', '',
                          '4 6 8 2  # figure eight', '0_1: -'])
    assert [name for name, _ in entries] == ['3_1', 'line4', '0_1']
    assert entries[0][1] == trefoil()
    assert entries[2][1].num_crossings == 0


def test_read_gauss():
    entries = read_codes(['t: O1+U2+O3+U1+O2+U3+'], kind='gauss')
    assert entries[0][1].num_crossings == 3


def test_line_diagnostics():
    assert_raises(MalformedCode, 'line 2:', read_codes,
                  ['4 6 2', 'bad: 4 6 3'])
    assert_raises(ValueError, 'Unknown code kind', read_codes, ['4 6 2'],
                  'pd')


def test_round_trip(tmp_path):
    path = str(tmp_path / 'knots.dt')
    write_codes([('3_1', trefoil()), ('4_1', figure_eight())], path)
    back = read_codes(path)
    assert [name for name, _ in back] == ['3_1', '4_1']
    assert canonical_code(back[1][1]) == canonical_code(figure_eight())


def test_format_code():
    assert format_code(trefoil()) == '4 6 2'
    assert format_code(trefoil(), 'gauss').count('O') == 3
