# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import os

from knotxtend._base import Certificate
from knotxtend.file_io import (certificate_manifest, write_manifest,
                               read_manifest, verdict_counts,
                               find_code_files, code_kind)
from knotxtend.utils import assert_raises


def certificates():
    return [Certificate('hoste', 'PASS', {'roots': 2}),
            Certificate('hoste', 'FAIL', {'left': [['-3', '-2']]}),
            Certificate('hoste', 'PASS', {'roots': 0})]


def test_manifest(tmp_path):
    df = certificate_manifest(['a', 'b', 'c'], ['4 6 2', '', '-'],
                              certificates())
    assert list(df.columns) == ['name', 'code', 'test', 'verdict',
                                'witnesses']
    assert df['witnesses'][0] == '{"roots":2}'
    assert verdict_counts(df) == {'FAIL': 1, 'PASS': 2}
    path = str(tmp_path / 'manifest.csv')
    write_manifest(df, path)
    back = read_manifest(path)
    assert list(back['name']) == ['a', 'b', 'c']
    assert back['code'][1] == ''
    assert list(back['witnesses']) == list(df['witnesses'])


def test_manifest_lengths():
    assert_raises(ValueError, 'Got 1 names', certificate_manifest, ['a'],
                  [], certificates())


def test_find_code_files(tmp_path):
    for name in ['a.dt', 'b.gauss', 'c.txt', '.hidden.dt', 'd.json']:
        with open(os.path.join(str(tmp_path), name), 'w') as f:
            f.write('\n')
    found = [os.path.basename(p) for p in find_code_files(str(tmp_path))]
    assert found == ['a.dt', 'b.gauss', 'd.json']
    found = find_code_files(str(tmp_path), extensions=('.dt',))
    assert [os.path.basename(p) for p in found] == ['a.dt']
    assert code_kind(found[0]) == 'dt'
    assert_raises(ValueError, 'Unknown code file extension', code_kind,
                  'x.txt')
