# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Fixed-point simplification of diagrams by crossing number reducing
# moves.
# Author: knotxtend developers
#
# License: BSD 3 clause

from .._base import _BaseConfig
from ..diagram import canonical_code, nugatory_crossings
from ..diagram.surgery import _untwist, sum_cuts
from ..utils.counter import Counter
from ..utils.errors import KnotxtendError
from ..invariants import jones
from ._routing import _OpenMap
from .reidemeister import (_kink_sites, _bigons, r1_minus, r2_minus,
                           r3_moves)
from .slides import factor_slide
from .trace import MoveTrace
from .wave import (reducing_wave_move, rational_sites, rational_tangle_move,
                   wave_moves)

_MODES = ('reidemeister', 'wave')


class SimplifyPolicy(_BaseConfig):

    """Moves allowed while simplifying a diagram.

    Parameters
    ----------
    mode : {'reidemeister', 'wave'} (default: 'wave')
        'reidemeister' uses curl, bigon and triangle moves only, never
        raising the crossing number. 'wave' adds rational tangle moves,
        reducing wave moves and wave moves after factor slides.
    budget : int (default: 200)
        Maximal number of applied moves.
    sign_monotone : bool (default: False)
        Reject wave moves raising c_plus or c_minus.
    explore : bool (default: False)
        When stuck, apply crossing number preserving wave moves to
        diagrams not seen before, within the budget.
    check : bool (default: False)
        Compare the Jones polynomial before and after every move.
    verbose : int (default: 0)
        Print progress to stderr when > 0.

    """
    def __init__(self, mode='wave', budget=200, sign_monotone=False,
                 explore=False, check=False, verbose=0):
        self.mode = mode
        self.budget = budget
        self.sign_monotone = sign_monotone
        self.explore = explore
        self.check = check
        self.verbose = verbose

    def _validate(self):
        if self.mode not in _MODES:
            raise ValueError('Unknown mode %r. Choose one of %s'
                             % (self.mode, ', '.join(_MODES)))
        if self.budget < 0:
            raise ValueError('budget must be >= 0. Got %r' % self.budget)


def _local_step(d):
    nug = nugatory_crossings(d)
    if nug:
        return 'nugatory', {'crossing': nug[0]}, _untwist(d, nug[0])
    kinks = _kink_sites(d)
    if kinks:
        return 'r1-', {'crossing': kinks[0]}, r1_minus(d, kinks[0])
    bigons = _bigons(d)
    if bigons:
        return ('r2-', {'crossings': list(bigons[0])},
                r2_minus(d, bigons[0]))
    return None


def _triangle_step(d):
    """A triangle move after which a local move applies."""
    for move in r3_moves(d):
        if _local_step(move.diagram) is not None:
            return move.kind, move.params, move.diagram
    return None


def _wave_step(d, policy):
    sites = rational_sites(d)
    if sites:
        first, last = sites[0]
        out = rational_tangle_move(d, sites[0])
        if not policy.sign_monotone or (out.c_plus <= d.c_plus and
                                        out.c_minus <= d.c_minus):
            return ('rational', _rational_params(d, first, last, out), out)
    found = reducing_wave_move(d, policy.sign_monotone)
    if found is not None:
        out, trace = found
        step = trace.steps[0]
        return step.kind, step.params, out
    return None


def _rational_params(d, first, last, out):
    om = _OpenMap.cut(d, first, last, d.head(first)[1] != 0)
    return {'first': first, 'last': last, 'over': om.over,
            'route': om.shortest_route()}


def _slide_steps(d, policy):
    """Factor slides followed by a reducing wave move."""
    for e, f, _ in sum_cuts(d):
        for cut in ((e, f), (f, e)):
            for steps in range(1, d.num_crossings + 1):
                try:
                    slid = factor_slide(d, cut, steps)
                except KnotxtendError:
                    break
                found = reducing_wave_move(slid, policy.sign_monotone)
                if found is None:
                    continue
                out, trace = found
                first = ('factor_slide', {'cut': list(cut), 'steps': steps},
                         slid)
                step = trace.steps[0]
                return [first, (step.kind, step.params, out)]
    return None


def simplify(diagram, policy=None):
    """Reduce a diagram until no allowed move lowers its crossing number.

    Moves are tried cheapest first: nugatory crossings, curls and
    bigons, then (mode 'wave') rational tangle moves, reducing wave
    moves and factor slides enabling a reducing wave move. The result
    is sound but not guaranteed minimal.

    Parameters
    ----------
    diagram : Diagram
    policy : SimplifyPolicy (default: None)

    Returns
    ----------
    (diagram, trace) : (Diagram, MoveTrace)

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt, switch_crossing
    >>> d, trace = simplify(switch_crossing(parse_dt('4 6 2'), 0))
    >>> d.num_crossings
    0

    """
    policy = SimplifyPolicy() if policy is None else policy
    policy._validate()
    if policy.check:
        reference = jones(diagram)
    trace = MoveTrace()
    seen = set([canonical_code(diagram)])
    counter = Counter(name='simplify') if policy.verbose > 0 else None
    d = diagram
    while len(trace) < policy.budget:
        steps = None
        found = _local_step(d)
        if found is None and policy.mode == 'reidemeister':
            found = _triangle_step(d)
        if found is None and policy.mode == 'wave':
            found = _wave_step(d, policy)
            if found is None:
                steps = _slide_steps(d, policy)
        if found is not None:
            steps = [found]
        if steps is None and policy.explore:
            steps = _explore_step(d, seen, policy)
        if steps is None:
            break
        for kind, params, out in steps:
            if policy.check and jones(out) != reference:
                raise AssertionError('Move %s changed the Jones'
                                     ' polynomial.' % kind)
            trace.add(kind, params, d, out)
            seen.add(canonical_code(out))
            d = out
        if counter is not None:
            counter.update()
    return d, trace


def _explore_step(d, seen, policy):
    """A crossing number preserving move to a diagram not seen yet."""
    if policy.mode == 'reidemeister':
        for move in r3_moves(d):
            if canonical_code(move.diagram) not in seen:
                return [(move.kind, move.params, move.diagram)]
        return None
    for move in wave_moves(d):
        if move.diagram.num_crossings != d.num_crossings:
            continue
        if canonical_code(move.diagram) in seen:
            continue
        params = {'first': move.first, 'last': move.last,
                  'over': move.over, 'route': list(move.route)}
        return [('wave', params, move.diagram)]
    return None
