# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from knotxtend.diagram import (parse_dt, parse_gauss, to_dt, to_gauss,
                               canonical_dt, canonical_code, format_dt,
                               seifert_state)
from knotxtend.utils import assert_raises
from knotxtend.utils.errors import MalformedCode, NonRealizable


def test_trefoil_dt():
    d = parse_dt('4 6 2')
    assert d.num_crossings == 3
    assert d.num_components == 1
    assert d.is_alternating()
    assert d.writhe == 3


def test_dt_list_input():
    assert parse_dt([4, 6, 2]) == parse_dt('4 6 2')


def test_empty_dt_is_unknot():
    d = parse_dt('')
    assert d.num_crossings == 0
    assert d.num_components == 1


def test_dt_comments_ignored():
    assert parse_dt('4 6 2  # trefoil') == parse_dt('4 6 2')


def test_malformed_dt():
    assert_raises(MalformedCode, 'nonzero even', parse_dt, '3 6 2')
    assert_raises(MalformedCode, 'permutation', parse_dt, '4 4 2')
    assert_raises(MalformedCode, 'permutation', parse_dt, '4 6 10')
    assert_raises(MalformedCode, 'integers', parse_dt, '4 x 2')


def test_all_four_crossing_codes_realize():
    for perm in permutations([2, 4, 6, 8]):
        d = parse_dt(list(perm))
        assert d.num_crossings == 4
        assert d.num_components == 1


def test_non_realizable_dt():
    # two non-interlaced crossings sharing exactly one interlaced neighbor
    with pytest.raises(NonRealizable):
        parse_dt('4 6 8 10 2')


def test_dt_round_trip():
    for code in ['4 6 2', '4 6 8 2', '4 8 10 2 6', '4 8 -12 2 -14 -16 -6 -10']:
        d = parse_dt(code)
        assert format_dt(to_dt(d)) == code


def test_canonical_dt():
    assert canonical_dt(parse_dt('4 6 2')) == (4, 6, 2)
    assert canonical_dt(parse_dt('-4 -6 -2')) == (4, 6, 2)
    assert canonical_dt(parse_dt('4 6 8 2')) == (4, 6, 8, 2)
    d = parse_dt('4 8 10 2 6')
    again = parse_dt(format_dt(canonical_dt(d)))
    assert canonical_dt(again) == canonical_dt(d)


def test_gauss_trefoil():
    d = parse_gauss('O1+U2+O3+U1+O2+U3+')
    assert d.writhe == 3
    assert canonical_code(d) == canonical_code(parse_dt('4 6 2'))


def test_gauss_negative_trefoil():
    d = parse_gauss('O1-U2-O3-U1-O2-U3-')
    assert d.writhe == -3
    assert d.c_minus == 3


def test_gauss_kink():
    d = parse_gauss('O1+U1+')
    assert d.num_crossings == 1
    assert d.num_components == 1
    assert d.signs == (1,)
    assert parse_gauss('O1-U1-').signs == (-1,)


def test_gauss_unsigned():
    d = parse_gauss('O1U2O3U1O2U3')
    assert d.num_crossings == 3
    assert abs(d.writhe) == 3


def test_gauss_non_planar():
    with pytest.raises(NonRealizable):
        parse_gauss('O1+U2+U1+O2+')


def test_gauss_malformed():
    assert_raises(MalformedCode, 'twice', parse_gauss, 'O1+O1+')
    assert_raises(MalformedCode, 'inconsistent', parse_gauss, 'O1+U1-')
    assert_raises(MalformedCode, 'once as O', parse_gauss, 'O1+U2+')
    assert_raises(MalformedCode, 'Cannot parse', parse_gauss, 'O1+X2+')


def test_gauss_export_round_trip():
    for code in ['4 6 2', '4 6 8 2', '4 8 10 2 6']:
        d = parse_dt(code)
        back = parse_gauss(to_gauss(d))
        assert canonical_code(back, symmetric=True) == \
            canonical_code(d, symmetric=True)


@settings(max_examples=30, deadline=None)
@given(st.permutations([2, 4, 6, 8, 10]),
       st.lists(st.booleans(), min_size=5, max_size=5))
def test_euler_characteristic_identities(perm, flags):
    code = [v if f else -v for v, f in zip(perm, flags)]
    try:
        d = parse_dt(code)
    except NonRealizable:
        return
    st_ = seifert_state(d)
    assert st_.chi == st_.s - d.num_crossings
    assert 2 * st_.genus == 1 - st_.chi
    assert len(d.faces()) == d.num_crossings + 2
