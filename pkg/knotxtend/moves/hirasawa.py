# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Making a diagram special without changing its canonical Euler
# characteristic.
# Author: knotxtend developers
#
# License: BSD 3 clause

import warnings

from ..diagram import (seifert_state, connected_sum, connected_sum_split,
                       flip, nugatory_crossings)
from ..utils.errors import KnotxtendError
from ._routing import _OpenMap, draw_route
from .reidemeister import r2_plus, _face_pairs
from .trace import MoveTrace


def _candidates(diagram, state, circle, length):
    """Results of rerouting one edge of `circle` along a closed route of
    `length` edges that keep chi and lower the separating count."""
    out = []
    for eps in state.circles[circle]:
        for over in (True, False):
            try:
                om = _OpenMap.cut(diagram, eps, eps, over)
            except KnotxtendError:
                continue
            for route in om.routes(length, min_length=length):
                try:
                    d = draw_route(om.copy(), route)
                except KnotxtendError:
                    continue
                if not d.is_connected():
                    continue
                st = seifert_state(d)
                if (st.chi != state.chi or
                        st.num_separating >= state.num_separating):
                    continue
                params = {'first': eps, 'last': eps, 'over': over,
                          'route': list(route)}
                out.append((params, d))
    return out


def _negatives(before, after):
    return after.c_minus - before.c_minus


def _ranked(diagram, found, ind, signature_aware):
    if signature_aware:
        return sorted(found, key=lambda item: abs(
            _negatives(diagram, item[1]) - (ind - 1)))
    return sorted(found, key=lambda item: _negatives(diagram, item[1]))


def _adds_nugatory(before, after):
    return len(nugatory_crossings(after)) > len(nugatory_crossings(before))


def _clasps(diagram, state, moved):
    """Trivial clasps on a moved diagram that keep chi and leave no new
    nugatory crossing."""
    out = []
    for a, b in _face_pairs(moved):
        for first, second in ((a, b), (b, a)):
            for over in (True, False):
                try:
                    d = r2_plus(moved, first, second, over)
                except KnotxtendError:
                    continue
                st = seifert_state(d)
                if (st.chi != state.chi or
                        st.num_separating >= state.num_separating or
                        _adds_nugatory(diagram, d)):
                    continue
                out.append(({'a': first, 'b': second, 'over': over}, d))
    return out


def _circle_order(state):
    """Separating circles, innermost first and then by id."""
    return [k for _, k in sorted((state.depth[k], k)
                                 for k, sep in enumerate(state.separating)
                                 if sep)]


def hirasawa_step(diagram, state=None, signature_aware=False):
    """One specializing move on the innermost separating circle that
    admits one, ties going to the lowest circle id.

    An edge of the circle is laid along a closed route through the faces
    around it, passing every crossed edge over or under. The ordinary
    move crosses 2 ind(s) - 1 edges. When ind(s) = 2 and every ordinary
    move leaves a nugatory crossing, a trivial clasp is added on top of
    it, for 2 ind(s) + 1 new crossings. Circles admitting neither get
    the shortest route of up to 2 ind(s) + 1 edges that does the job.

    Parameters
    ----------
    diagram : Diagram
    state : SeifertState (default: None)
    signature_aware : bool (default: False)
        Among equally long moves prefer one adding ind(s) - 1 negative
        crossings; otherwise prefer the fewest negative crossings.

    Returns
    ----------
    step : (dict, Diagram) or None
        Move parameters, with the circle, its index and the move kind
        ('ordinary', 'modified' or 'fallback'), and the result.

    """
    state = seifert_state(diagram) if state is None else state
    for k in _circle_order(state):
        ind = state.index[k]
        plain = 2 * ind - 1
        found = _ranked(diagram, _candidates(diagram, state, k, plain),
                        ind, signature_aware)
        clean = [item for item in found
                 if not _adds_nugatory(diagram, item[1])]
        kind, step = 'ordinary', None
        if clean:
            step = clean[0]
        elif found and ind == 2:
            for params, moved in found:
                clasps = _ranked(diagram, _clasps(diagram, state, moved),
                                 ind, signature_aware)
                if clasps:
                    clasp, d = clasps[0]
                    params = dict(params, clasp=clasp)
                    kind, step = 'modified', (params, d)
                    break
        if step is None and found:
            step = found[0]
        if step is None:
            kind = 'fallback'
            for length in range(1, max(3, 2 * ind + 1) + 1):
                if length == plain:
                    continue
                found = _candidates(diagram, state, k, length)
                if found:
                    step = _ranked(diagram, found, ind, signature_aware)[0]
                    break
        if step is None:
            continue
        params, d = step
        params = dict(params, circle=k, ind=ind, kind=kind)
        return params, d
    return None


def _specialize_prime(diagram, trace, signature_aware, max_steps):
    d = diagram
    for _ in range(max_steps):
        state = seifert_state(d)
        if state.is_special():
            return d, True
        step = hirasawa_step(d, state, signature_aware)
        if step is None:
            return d, False
        params, out = step
        trace.notes.setdefault('steps', []).append(
            {'circle': params['circle'], 'ind': params['ind'],
             'kind': params['kind'],
             'added': out.num_crossings - d.num_crossings})
        move = dict((k, params[k]) for k in ('first', 'last', 'over',
                                             'route', 'clasp')
                    if k in params)
        trace.add('hirasawa', move, d, out)
        d = out
    return d, seifert_state(d).is_special()


def _special_sum(a, b):
    """A connected sum of special diagrams that is special, flipping the
    second summand when the merged circle would separate."""
    for bb in (b, flip(b)):
        for ea in a.edges:
            for eb in bb.edges:
                d = connected_sum(a, bb, ea, eb)
                if seifert_state(d).is_special():
                    return d
    return connected_sum(a, b)


def hirasawa_specialize(diagram, signature_aware=False, max_steps=None):
    """Turn a diagram into a special one with the same chi.

    Parameters
    ----------
    diagram : Diagram
        Connected diagram.
    signature_aware : bool (default: False)
        See `hirasawa_step`.
    max_steps : int (default: None)
        Cap on the number of moves; None allows one per crossing plus
        one.

    Returns
    ----------
    (diagram, trace) : (Diagram, MoveTrace)
        The trace notes record the circle index and the number of added
        crossings of each move.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> d, trace = hirasawa_specialize(parse_dt('4 6 2'))
    >>> d.num_crossings, len(trace)
    (3, 0)

    """
    trace = MoveTrace()
    if max_steps is None:
        max_steps = diagram.num_crossings + 1
    d, done = _specialize_prime(diagram, trace, signature_aware, max_steps)
    if done:
        return d, trace
    factors = connected_sum_split(d)
    if len(factors) > 1:
        out = None
        for factor in factors:
            sub = MoveTrace()
            special, _ = _specialize_prime(factor, sub, signature_aware,
                                           max_steps)
            trace.notes.setdefault('factors', []).append(sub.to_dict())
            out = special if out is None else _special_sum(out, special)
        trace.notes['summed'] = True
        d = out
    if not seifert_state(d).is_special():
        warnings.warn('No specializing move found; %d separating circles'
                      ' remain.' % seifert_state(d).num_separating)
    return d, trace
