# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# The all-A and all-B states: loops, traces and adequacy.
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

from ..diagram import seifert_state
from .bracket import A_SPLICE, B_SPLICE


def state_loops(diagram, splice):
    """Loops of the state splicing every crossing by `splice`.

    Returns
    ----------
    (loops, where) : (list of lists, dict)
        Each loop is the cyclic list of crossing ends (c, p) it visits;
        `where` maps an end to (loop id, position in the loop).

    """
    partner = {}
    for c in range(diagram.num_crossings):
        for p, q in splice:
            partner[(c, p)] = (c, q)
            partner[(c, q)] = (c, p)
    where = {}
    loops = []
    for c in range(diagram.num_crossings):
        for p in range(4):
            if (c, p) in where:
                continue
            loop = []
            end = (c, p)
            while end not in where:
                where[end] = (len(loops), len(loop))
                loop.append(end)
                nxt = partner[end]
                where[nxt] = (len(loops), len(loop))
                loop.append(nxt)
                end = diagram.other_end(*nxt)
            loops.append(loop)
    return loops, where


def _interlaced(a, b):
    (a1, a2), (b1, b2) = sorted(a), sorted(b)
    return (a1 < b1 < a2) != (a1 < b2 < a2)


def traces(diagram, splice):
    """For each crossing, the (loop, position) pairs its trace joins."""
    loops, where = state_loops(diagram, splice)
    out = []
    for c in range(diagram.num_crossings):
        (p1, _), (p2, _) = splice
        out.append((where[(c, p1)], where[(c, p2)]))
    return loops, out


def self_traces(diagram, splice):
    """Crossings whose trace joins a loop to itself."""
    _, tr = traces(diagram, splice)
    return [c for c, ((l1, _), (l2, _)) in enumerate(tr) if l1 == l2]


def isolated_self_traces(diagram, splice):
    """Self-traces not interlaced with another self-trace of their loop.
    """
    _, tr = traces(diagram, splice)
    selfs = [c for c, ((l1, _), (l2, _)) in enumerate(tr) if l1 == l2]
    out = []
    for c in selfs:
        loop = tr[c][0][0]
        span = (tr[c][0][1], tr[c][1][1])
        paired = any(tr[d][0][0] == loop
                     and _interlaced(span, (tr[d][0][1], tr[d][1][1]))
                     for d in selfs if d != c)
        if not paired:
            out.append(c)
    return out


class AStateReport(object):

    """Summary of the A-state of a diagram.

    Attributes
    ----------
    loops : int
        |A(D)|, counting crossingless components.
    self_traces : list of int
    isolated : list of int
        Self-traces of the A-state that pair up with no other one.
    a_adequate, b_adequate : bool
    m : Fraction or int
        g(D) - 3/2 c_minus(D) + (s(D) - |A(D)|) / 2, the degree in which
        the A-state contributes to the Jones polynomial.
    gap_predicted : bool
        An isolated self-trace forces mindeg V > m.

    """
    def __init__(self, loops, self_traces, isolated, a_adequate,
                 b_adequate, m):
        self.loops = loops
        self.self_traces = self_traces
        self.isolated = isolated
        self.a_adequate = a_adequate
        self.b_adequate = b_adequate
        self.m = m
        self.gap_predicted = bool(isolated)

    @property
    def semiadequate(self):
        return self.a_adequate or self.b_adequate

    @property
    def adequate(self):
        return self.a_adequate and self.b_adequate

    def __repr__(self):
        return ('AStateReport(loops=%d, self_traces=%r, m=%s)'
                % (self.loops, self.self_traces, self.m))


def a_state_analysis(diagram):
    """Loop count, traces and adequacy of the A- and B-states.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> r = a_state_analysis(parse_dt('4 6 8 2'))
    >>> r.loops, r.adequate, r.m
    (3, True, -2)

    """
    loops, _ = state_loops(diagram, A_SPLICE)
    count = len(loops) + diagram.free_loops
    selfs = self_traces(diagram, A_SPLICE)
    st = seifert_state(diagram)
    m = (Fraction(st.genus) - Fraction(3, 2) * diagram.c_minus
         + Fraction(st.s - count, 2))
    if m.denominator == 1:
        m = int(m)
    return AStateReport(count, selfs,
                        isolated_self_traces(diagram, A_SPLICE),
                        not selfs, not self_traces(diagram, B_SPLICE), m)
