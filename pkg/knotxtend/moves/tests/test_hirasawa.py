# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.diagram import seifert_state, canonical_code
from knotxtend.invariants import jones
from knotxtend.equivalence import equivalence_classes
from knotxtend.moves import (hirasawa_specialize, hirasawa_step, apply_move,
                             BraidWord)
from knotxtend.moves.hirasawa import _circle_order
from knotxtend.data import trefoil, figure_eight, torus_2


@pytest.mark.parametrize('d', [trefoil(), torus_2(5), trefoil(-1)])
def test_special_unchanged(d):
    out, trace = hirasawa_specialize(d)
    assert len(trace) == 0
    assert canonical_code(out) == canonical_code(d)
    assert hirasawa_step(d) is None


def test_figure_eight():
    d = figure_eight()
    before = seifert_state(d)
    assert not before.is_special()
    out, trace = hirasawa_specialize(d)
    after = seifert_state(out)
    assert after.is_special()
    assert after.chi == before.chi == -1
    assert out.num_crossings > d.num_crossings
    assert jones(out) == jones(d)
    assert len(trace.notes['steps']) == len(trace)
    assert canonical_code(trace.replay(d)) == canonical_code(out)


def test_step_parameters():
    params, out = hirasawa_step(figure_eight())
    assert params['first'] == params['last']
    assert params['circle'] in range(seifert_state(figure_eight()).s)
    assert seifert_state(out).num_separating < \
        seifert_state(figure_eight()).num_separating
    assert params['ind'] == 2
    assert params['kind'] in ('ordinary', 'modified', 'fallback')
    if params['kind'] == 'ordinary':
        assert out.num_crossings == 4 + 3
    elif params['kind'] == 'modified':
        assert out.num_crossings == 4 + 5
        assert set(params['clasp']) == set(['a', 'b', 'over'])


def _check_step_counts(d, trace):
    cur = d
    for note, step in zip(trace.notes['steps'], trace):
        nxt = apply_move(cur, step.kind, step.params)
        ind = note['ind']
        assert ind >= 1
        assert note['added'] == nxt.num_crossings - cur.num_crossings
        if note['kind'] == 'ordinary':
            assert note['added'] == 2 * ind - 1
            grown = equivalence_classes(nxt).t - equivalence_classes(cur).t
            assert grown >= 2 * ind - 3
        elif note['kind'] == 'modified':
            assert ind == 2
            assert note['added'] == 2 * ind + 1
        assert seifert_state(nxt).chi == seifert_state(cur).chi
        cur = nxt
    return cur


def test_step_counts():
    d = figure_eight()
    out, trace = hirasawa_specialize(d)
    assert len(trace) >= 1
    last = _check_step_counts(d, trace)
    assert canonical_code(last) == canonical_code(out)


def test_innermost_circle_first():
    d = BraidWord.from_string('5: 1 -2 3 -4 1 -2 3 -4').closure()
    st = seifert_state(d)
    order = _circle_order(st)
    assert len(order) == 3
    assert [st.depth[k] for k in order] == [0, 0, 1]
    assert order[0] < order[1]


@pytest.mark.slow
@pytest.mark.parametrize('name', ['5_2', '6_1', '6_2'])
def test_table_knots(name):
    from knotxtend.data import knot
    d = knot(name)
    out, trace = hirasawa_specialize(d, signature_aware=True)
    assert seifert_state(out).chi == seifert_state(d).chi
    assert jones(out) == jones(d)
    if 'factors' not in trace.notes:
        _check_step_counts(d, trace)
