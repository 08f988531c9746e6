# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Exact independence indices of Seifert graphs and the core set of
# maximal independent sets.
# Author: knotxtend developers
#
# License: BSD 3 clause

import warnings

import networkx as nx

from ..utils.errors import NonBipartite
from .marked import MarkedGraph

_RULES = ('mp', 'zero', 'bands')


class IndexMemo(object):

    """Index values cached by isomorphism class of the marked graph.

    Graphs are bucketed by their Weisfeiler-Lehman hash; a hash collision
    falls back to an isomorphism test, so the cache never returns the
    value of a different graph.

    Attributes
    ----------
    hits : int
    misses : int

    """
    def __init__(self):
        self._table = {}
        self.hits = 0
        self.misses = 0

    def _bucket(self, graph, rule, sign):
        g = graph.to_networkx(signed=sign is not None)
        h = nx.weisfeiler_lehman_graph_hash(g, edge_attr='label')
        return (rule, sign, h), g

    def get(self, graph, rule, sign):
        key, g = self._bucket(graph, rule, sign)
        for other, value in self._table.get(key, []):
            if nx.is_isomorphic(g, other, edge_match=_same_label):
                self.hits += 1
                return value
        self.misses += 1
        return None

    def put(self, graph, rule, sign, value):
        key, g = self._bucket(graph, rule, sign)
        self._table.setdefault(key, []).append((g, value))

    def __len__(self):
        return sum(len(v) for v in self._table.values())


def _same_label(a, b):
    return a['label'] == b['label']


def _as_marked(graph):
    if isinstance(graph, MarkedGraph):
        return graph
    return graph.marked()


def _step(graph, e, v, rule):
    if rule == 'mp':
        return graph.contract(v)
    child = graph.move(e, v, bands=(rule == 'bands'))
    return child


def _index(graph, rule, sign, memo):
    if not graph.edges:
        return 0
    if rule == 'mp' and sign is None:
        parts = graph.blocks()
        if len(parts) > 1 and graph.is_bipartite():
            return sum(_index(p, rule, sign, memo) for p in parts)
    cached = memo.get(graph, rule, sign)
    if cached is not None:
        return cached
    check = rule != 'mp' and graph.is_two_connected()
    best = 0
    for (a, b), edge in sorted(graph.edges.items()):
        if edge.marked or (sign is not None and edge.sign != sign):
            continue
        for v in (a, b):
            child = _step(graph, (a, b), v, rule)
            if check and not child.is_two_connected():
                warnings.warn('The move at edge %r and vertex %r lost'
                              ' 2-connectivity.' % ((a, b), v))
            best = max(best, 1 + _index(child, rule, sign, memo))
    memo.put(graph, rule, sign, best)
    return best


def ind(graph, sign=None, memo=None):
    """Murasugi-Przytycki index: the longest independent edge sequence.

    Each chosen edge must be simple; the sequence continues in the graph
    with the star of one of its ends contracted.

    Parameters
    ----------
    graph : SeifertGraph or MarkedGraph
    sign : {None, 1, -1} (default: None)
        Restrict the chosen edges to one sign (ind_+ and ind_-).
    memo : IndexMemo (default: None)
        Shared cache; a fresh one is used when None.

    Returns
    ----------
    index : int

    Examples
    -----------
    >>> from knotxtend.graph import from_edge_list
    >>> ind(from_edge_list([(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]))
    1

    """
    memo = IndexMemo() if memo is None else memo
    return _index(_as_marked(graph), 'mp', sign, memo)


def _check_bipartite(graph):
    if not graph.is_bipartite():
        raise NonBipartite('The graph has an odd cycle; the index needs a'
                           ' bipartite graph.')


def ind0(graph, memo=None):
    """Index under the diagram move graph G\\e v.

    Edges at v towards the side of e are marked rather than contracted,
    and only edges reaching the side of e are pulled onto v.
    """
    g = _as_marked(graph)
    _check_bipartite(g)
    memo = IndexMemo() if memo is None else memo
    return _index(g, 'zero', None, memo)


def ind_b(graph, memo=None):
    """Restricted index, keeping track of bands: like `ind0` but edges
    pulled onto v get marked."""
    g = _as_marked(graph)
    _check_bipartite(g)
    memo = IndexMemo() if memo is None else memo
    return _index(g, 'bands', None, memo)


def core_set(graph, memo=None):
    """Edge ids lying in every maximal independent set.

    Parameters
    ----------
    graph : SeifertGraph or MarkedGraph

    Returns
    ----------
    core : frozenset
        Crossing ids for Seifert graphs of diagrams. Empty when the
        graph has no simple edge.

    """
    memo = IndexMemo() if memo is None else memo
    cache = {}

    def core(g):
        key = frozenset(g.edges.items())
        if key in cache:
            return cache[key]
        target = _index(g, 'mp', None, memo)
        out = None
        for (a, b), edge in sorted(g.edges.items()):
            if edge.marked:
                continue
            for v in (a, b):
                child = g.contract(v)
                if _index(child, 'mp', None, memo) != target - 1:
                    continue
                s = edge.ids | core(child)
                out = s if out is None else out & s
        cache[key] = frozenset() if out is None else frozenset(out)
        return cache[key]

    return core(_as_marked(graph))
