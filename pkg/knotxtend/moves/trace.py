# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Audit trail of diagram moves and its replay.
# Author: knotxtend developers
#
# License: BSD 3 clause

from collections import namedtuple

from ..diagram import canonical_code

Step = namedtuple('Step', ['kind', 'params', 'before', 'after', 'delta'])

# kinds whose parameters describe a strand reroute
REROUTES = ('wave', 'rational', 'hirasawa', 'mp', 'r3')


def _listify(value):
    if isinstance(value, (list, tuple)):
        return [_listify(v) for v in value]
    if isinstance(value, dict):
        return dict((k, _listify(v)) for k, v in value.items())
    return value


def _tupleize(value):
    if isinstance(value, list):
        return tuple(_tupleize(v) for v in value)
    return value


def apply_move(diagram, kind, params):
    """Apply one recorded move to `diagram`.

    Parameters
    ----------
    diagram : Diagram
    kind : str
        'wave', 'rational', 'hirasawa', 'mp', 'r3', 'nugatory', 'r1-',
        'r2-', 'r1+', 'r2+' or 'factor_slide'.
    params : dict
        As stored in a MoveTrace step. A reroute with a 'clasp' entry
        is followed by the finger move it describes.

    Returns
    ----------
    diagram : Diagram

    """
    from ..diagram.surgery import _untwist
    from ._routing import reroute
    from .reidemeister import r1_minus, r2_minus, r1_plus, r2_plus
    from .slides import factor_slide

    if kind in REROUTES:
        out = reroute(diagram, params['first'], params['last'],
                      params['over'], params['route'])
        clasp = params.get('clasp')
        if clasp:
            out = r2_plus(out, clasp['a'], clasp['b'], clasp['over'])
        return out
    if kind == 'nugatory':
        return _untwist(diagram, params['crossing'])
    if kind == 'r1-':
        return r1_minus(diagram, params['crossing'])
    if kind == 'r2-':
        return r2_minus(diagram, tuple(params['crossings']))
    if kind == 'r1+':
        return r1_plus(diagram, params['edge'], params['sign'],
                       params['over_first'])
    if kind == 'r2+':
        return r2_plus(diagram, params['a'], params['b'], params['over'])
    if kind == 'factor_slide':
        return factor_slide(diagram, tuple(params['cut']), params['steps'])
    raise ValueError('Move kind %r cannot be replayed.' % kind)


class MoveTrace(object):

    """Sequence of applied moves.

    Each step stores the move kind, its parameters, the canonical codes
    of the diagrams before and after it and the change of the crossing
    number.

    Attributes
    ----------
    steps : list of Step
    notes : dict
        Free-form data attached by the move that built the trace.

    """
    def __init__(self, steps=None, notes=None):
        self.steps = list(steps or [])
        self.notes = dict(notes or {})

    def add(self, kind, params, before, after):
        self.steps.append(Step(kind, dict(params), canonical_code(before),
                               canonical_code(after),
                               after.num_crossings - before.num_crossings))

    def extend(self, other):
        self.steps.extend(other.steps)
        for key, value in other.notes.items():
            self.notes.setdefault(key, value)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def delta(self):
        """Total change of the crossing number."""
        return sum(step.delta for step in self.steps)

    def kinds(self):
        return [step.kind for step in self.steps]

    def replay(self, diagram, check=True):
        """Re-apply every step starting from `diagram`.

        Parameters
        ----------
        diagram : Diagram
            The start diagram with the labels it had when the trace was
            recorded.
        check : bool (default: True)
            Compare canonical codes before and after every step.

        Returns
        ----------
        diagram : Diagram

        """
        d = diagram
        for i, step in enumerate(self.steps):
            if check and canonical_code(d) != step.before:
                raise ValueError('Step %d (%s) starts from a different'
                                 ' diagram.' % (i, step.kind))
            d = apply_move(d, step.kind, step.params)
            if check and canonical_code(d) != step.after:
                raise ValueError('Step %d (%s) did not reproduce its'
                                 ' recorded result.' % (i, step.kind))
        return d

    def to_dict(self):
        return {'version': 1,
                'steps': [{'kind': s.kind,
                           'params': _listify(s.params),
                           'before': _listify(s.before),
                           'after': _listify(s.after),
                           'delta': s.delta} for s in self.steps],
                'notes': _listify(self.notes)}

    @classmethod
    def from_dict(cls, data):
        steps = [Step(s['kind'], dict(s['params']), _tupleize(s['before']),
                      _tupleize(s['after']), s['delta'])
                 for s in data['steps']]
        return cls(steps, data.get('notes'))

    def __repr__(self):
        return 'MoveTrace(%s)' % ', '.join(self.kinds())
