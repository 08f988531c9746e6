# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Braid index bounds from the Seifert graph.
# Author: knotxtend developers
#
# License: BSD 3 clause

import warnings

import numpy as np

from .._base import Certificate, checks_certificate, INAPPLICABLE
from ..diagram import seifert_state
from ..equivalence import equivalence_classes, is_generating
from ..invariants.skein import mwf
from ..math import det_mod2
from ..utils.errors import NotSpecial, NotGenerating
from .index import IndexMemo, ind, ind0, ind_b, core_set
from .seifert_graph import SeifertGraph, build_graph


class IndexReport(object):

    """Indices of a Seifert graph and the bounds derived from them.

    Attributes
    ----------
    ind, ind_plus, ind_minus, ind0, ind_b : int
    core : frozenset
        Crossings lying in every maximal independent set.
    mpb : int
        s(D) - ind(D), an upper bound for the braid index.
    q1, q2 : int
        Bounds on the maximal and minimal l-degree of the skein
        polynomial.

    """
    def __init__(self, ind, ind_plus, ind_minus, ind0, ind_b, core, s, w):
        self.ind = ind
        self.ind_plus = ind_plus
        self.ind_minus = ind_minus
        self.ind0 = ind0
        self.ind_b = ind_b
        self.core = core
        self.mpb = s - ind
        self.q1 = w + s - 1 - 2 * ind_plus
        self.q2 = w - s + 1 + 2 * ind_minus

    @property
    def discrepancy(self):
        return self.ind != self.ind0

    def to_dict(self):
        return {'ind': self.ind, 'ind_plus': self.ind_plus,
                'ind_minus': self.ind_minus, 'ind0': self.ind0,
                'ind_b': self.ind_b, 'core': sorted(self.core),
                'mpb': self.mpb, 'q1': self.q1, 'q2': self.q2}

    def __repr__(self):
        return ('IndexReport(ind=%d, ind0=%d, ind_b=%d, mpb=%d)'
                % (self.ind, self.ind0, self.ind_b, self.mpb))


def mp_bounds(diagram, memo=None):
    """Indices and Murasugi-Przytycki bounds of a connected diagram.

    Parameters
    ----------
    diagram : Diagram
    memo : IndexMemo (default: None)

    Returns
    ----------
    report : IndexReport

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> mp_bounds(parse_dt('4 6 8 2')).mpb
    3

    """
    memo = IndexMemo() if memo is None else memo
    g = build_graph(diagram)
    m = g.marked()
    report = IndexReport(ind(m, memo=memo),
                         ind(m, sign=1, memo=memo),
                         ind(m, sign=-1, memo=memo),
                         ind0(m, memo=memo),
                         ind_b(m, memo=memo),
                         core_set(m, memo=memo),
                         g.num_vertices, diagram.writhe)
    if report.discrepancy:
        warnings.warn('ind = %d differs from ind0 = %d.'
                      % (report.ind, report.ind0))
    return report


def psim_check(diagram, memo=None):
    """Check mpb(D) <= t(D) + chi(D) on a special generator.

    Parameters
    ----------
    diagram : Diagram
        Special alternating generating knot diagram.

    Returns
    ----------
    certificate : Certificate
        Witnesses hold mpb, t, chi, c, ind_b, mwf and 'shortcut', true
        when t + chi equals mwf so that both braid index bounds meet.

    """
    st = seifert_state(diagram)
    if not st.is_special():
        raise NotSpecial('The diagram has %d separating Seifert circles.'
                         % st.num_separating)
    if not is_generating(diagram):
        raise NotGenerating('The diagram has a ~-class with more than 2'
                            ' crossings.')
    report = mp_bounds(diagram, memo=memo)
    t = equivalence_classes(diagram).t
    c = diagram.num_crossings
    bound = t + st.chi
    upper = mwf(diagram)
    witnesses = {'mpb': report.mpb, 't': t, 'chi': st.chi, 'c': c,
                 'ind_b': report.ind_b, 'mwf': upper,
                 'shortcut': bound == upper}
    checks = [('mpb <= t + chi', report.mpb <= bound,
               '%d <= %d' % (report.mpb, bound)),
              ('ind_b >= c - t', report.ind_b >= c - t,
               '%d >= %d' % (report.ind_b, c - t))]
    cert = checks_certificate('psim', checks, witnesses)
    if bound == upper:
        cert.provenance.append('t + chi = mwf = %d, so mwf = mpb' % upper)
    return cert


def spanning_tree_parity(graph):
    """Number of spanning trees of a Seifert graph modulo 2."""
    nodes = sorted(graph.graph.nodes)
    if len(nodes) < 2:
        return 1
    pos = {v: i for i, v in enumerate(nodes)}
    lap = np.zeros((len(nodes), len(nodes)), dtype=np.int64)
    for u, v in graph.graph.edges():
        if u == v:
            continue
        i, j = pos[u], pos[v]
        lap[i, i] += 1
        lap[j, j] += 1
        lap[i, j] -= 1
        lap[j, i] -= 1
    return det_mod2(lap[1:, 1:])


def ci_check(graph, memo=None):
    """Check 4 ind(G) + e(G) >= 3 (v(G) - 1) on graphs with an odd number
    of spanning trees.

    Parameters
    ----------
    graph : SeifertGraph or Diagram

    Returns
    ----------
    certificate : Certificate
        INAPPLICABLE when the number of spanning trees is even.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> ci_check(parse_dt('4 6 2')).verdict
    'PASS'

    """
    if not isinstance(graph, SeifertGraph):
        graph = build_graph(graph)
    v, e = graph.num_vertices, graph.num_edges
    if spanning_tree_parity(graph) == 0:
        return Certificate('ci', INAPPLICABLE, {'v': v, 'e': e},
                           ['even number of spanning trees'])
    index = ind(graph, memo=memo)
    return checks_certificate(
        'ci', [('4ind + e >= 3(v - 1)', 4 * index + e >= 3 * (v - 1),
                '%d >= %d' % (4 * index + e, 3 * (v - 1)))],
        {'ind': index, 'v': v, 'e': e})
