# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import pytest

from knotxtend.diagram import switch_crossing, canonical_code
from knotxtend.invariants import jones
from knotxtend.math import LaurentPoly
from knotxtend.moves import SimplifyPolicy, simplify, random_unknot
from knotxtend.data import trefoil, figure_eight, kinked_trefoil
from knotxtend.utils import assert_raises


@pytest.mark.parametrize('mode', ['wave', 'reidemeister'])
def test_switched_trefoil(mode):
    d = switch_crossing(trefoil(), 0)
    out, trace = simplify(d, SimplifyPolicy(mode=mode, check=True))
    assert out.num_crossings == 0
    assert trace.delta == -3
    assert canonical_code(trace.replay(d)) == canonical_code(out)


@pytest.mark.parametrize('d', [trefoil(), figure_eight()])
def test_minimal_unchanged(d):
    out, trace = simplify(d)
    assert len(trace) == 0
    assert canonical_code(out) == canonical_code(d)


def test_kinked_trefoil():
    d = kinked_trefoil()
    out, trace = simplify(d)
    assert out.num_crossings == 3
    assert jones(out) == jones(d)
    assert trace.kinds()[0] in ('nugatory', 'r1-')


def test_budget():
    d = switch_crossing(trefoil(), 0)
    out, trace = simplify(d, SimplifyPolicy(mode='reidemeister', budget=1))
    assert len(trace) == 1
    assert out.num_crossings == 1


def test_policy_validation():
    assert_raises(ValueError, 'Unknown mode', simplify, trefoil(),
                  SimplifyPolicy(mode='greedy'))
    assert_raises(ValueError, 'budget must be', simplify, trefoil(),
                  SimplifyPolicy(budget=-1))
    p = SimplifyPolicy(budget=5)
    assert p.get_params()['budget'] == 5


@pytest.mark.slow
@pytest.mark.parametrize('seed', range(5))
def test_random_unknots(seed):
    d = random_unknot(8, seed=seed, max_negative=2)
    out, trace = simplify(d)
    assert out.num_crossings == 0
    assert jones(out) == LaurentPoly.one()
    assert all(step.delta <= 0 for step in trace)
    assert canonical_code(trace.replay(d)) == canonical_code(out)


@pytest.mark.slow
def test_unknot_sample_reaches_zero():
    for seed in range(500):
        d = random_unknot(14, seed=seed, max_negative=2)
        assert simplify(d)[0].num_crossings == 0
