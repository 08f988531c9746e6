# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Dowker-Thistlethwaite and Gauss codes: parsing, realization, export.
# Author: knotxtend developers
#
# License: BSD 3 clause

import re

import networkx as nx

from ._diagram import Diagram, unknot
from .surgery import reflect, reflect_crossings, sum_parts
from ..utils.errors import MalformedCode, NonRealizable


def _tokens(code):
    if isinstance(code, str):
        code = code.split('#', 1)[0].split()
    return list(code)


def parse_dt(code):
    """Diagram of a Dowker-Thistlethwaite code.

    Passes along the knot are numbered 1..2c; the k-th entry gives the
    even partner of odd pass 2k - 1. A positive entry means the odd pass
    is the over-pass, so all-positive codes are alternating.

    Parameters
    ----------
    code : str or sequence of int
        Whitespace separated signed even integers, or a list of them.

    Returns
    ----------
    diagram : Diagram

    Examples
    -----------
    >>> parse_dt('4 6 2').writhe
    3
    >>> parse_dt('').num_crossings
    0

    """
    try:
        entries = [int(v) for v in _tokens(code)]
    except ValueError:
        raise MalformedCode('DT code entries must be integers. Got %r'
                            % (code,))
    c = len(entries)
    if c == 0:
        return unknot()
    for v in entries:
        if v == 0 or v % 2:
            raise MalformedCode('DT code entries must be nonzero even'
                                ' integers. Got %d' % v)
    if sorted(abs(v) for v in entries) != list(range(2, 2 * c + 1, 2)):
        raise MalformedCode('DT code absolute values must be a permutation'
                            ' of 2, 4, ..., %d. Got %r' % (2 * c, entries))
    pairs = []
    for k, v in enumerate(entries):
        odd = 2 * k + 1
        pairs.append((odd, abs(v), v > 0))
    return _realize(2 * c, pairs)


def _parse_gauss_tokens(code):
    if not isinstance(code, str):
        code = ' '.join(str(v) for v in code)
    code = code.split('#', 1)[0]
    tokens = re.findall(r'([OUou])\s*(\w+?)\s*([+-]?)(?=[OUou]|\s|$)',
                        code)
    rest = re.sub(r'([OUou])\s*(\w+?)\s*([+-]?)(?=[OUou]|\s|$)', '', code)
    if rest.strip():
        raise MalformedCode('Cannot parse Gauss code near %r' % rest.strip())
    return [(kind.upper(), label, sign) for kind, label, sign in tokens]


def parse_gauss(code):
    """Diagram of a signed Gauss code such as ``O1+U2+O3+U1+O2+U3+``.

    Each label must appear once as O and once as U. Signs are optional;
    when given, both occurrences must agree and the realization is
    reflected (globally or per connected-sum factor) to match them.

    Parameters
    ----------
    code : str

    Returns
    ----------
    diagram : Diagram

    """
    tokens = _parse_gauss_tokens(code)
    if not tokens:
        return unknot()
    where = {}
    signs = {}
    for i, (kind, label, sign) in enumerate(tokens):
        where.setdefault(label, {})
        if kind in where[label]:
            raise MalformedCode('Label %s appears twice as %s.'
                                % (label, kind))
        where[label][kind] = i + 1
        if sign:
            value = 1 if sign == '+' else -1
            if signs.get(label, value) != value:
                raise MalformedCode('Label %s has inconsistent signs.'
                                    % label)
            signs[label] = value
    for label, kinds in where.items():
        if set(kinds) != {'O', 'U'}:
            raise MalformedCode('Label %s must appear once as O and once as'
                                ' U.' % label)
    if signs and len(signs) != len(where):
        raise MalformedCode('Either all or no crossings must carry signs.')

    order = sorted(where, key=lambda lb: min(where[lb].values()))
    pairs = []
    for label in order:
        o, u = where[label]['O'], where[label]['U']
        first, second = min(o, u), max(o, u)
        pairs.append((first, second, first == o))
    diagram = _realize(2 * len(order), pairs)
    if not signs:
        return diagram
    wanted = [signs[label] for label in order]
    return _match_signs(diagram, wanted)


def _match_signs(diagram, wanted):
    if diagram.signs[0] != wanted[0]:
        diagram = reflect(diagram)
    bad = set(c for c, s in enumerate(diagram.signs) if s != wanted[c])
    if not bad:
        return diagram
    for part in sum_parts(diagram):
        hit = bad & set(part)
        if hit and hit != set(part):
            raise NonRealizable('No planar realization carries the given'
                                ' crossing signs.')
        if hit:
            diagram = reflect_crossings(diagram, part)
    return diagram


def _realize(num_passes, pairs):
    """Embed a one-component code.

    `pairs` holds (first pass, second pass, first is over) per crossing,
    passes numbered 1..num_passes. Pass i has incoming edge i - 2 and
    outgoing edge i - 1 (mod num_passes).

    Each crossing is blown up into a wheel whose rim lists the four
    strand ends; every arc gets a midpoint vertex. The rotation at the
    hub of a planar embedding is the rotation of the crossing.
    """
    n = num_passes
    g = nx.Graph()
    for k, (a, b, _) in enumerate(pairs):
        rim = [('in', a), ('in', b), ('out', a), ('out', b)]
        for i in range(4):
            g.add_edge(rim[i], rim[(i + 1) % 4])
            g.add_edge(('hub', k), rim[i])
    for i in range(1, n + 1):
        j = i % n + 1
        g.add_edge(('out', i), ('mid', i))
        g.add_edge(('mid', i), ('in', j))
    planar, embedding = nx.check_planarity(g)
    if not planar:
        raise NonRealizable('The code has no planar realization.')

    def in_edge(p):
        return (p - 2) % n

    def out_edge(p):
        return p - 1

    ccw = {}
    for k in range(len(pairs)):
        ccw[k] = list(reversed(list(embedding.neighbors_cw_order(('hub',
                                                                  k)))))
    # fix the reflection: at crossing 0 the order is
    # (first in, second in, first out, second out) counterclockwise
    a0, b0, _ = pairs[0]
    order0 = ccw[0]
    i = order0.index(('in', a0))
    if order0[(i + 1) % 4] != ('in', b0):
        ccw = {k: list(reversed(v)) for k, v in ccw.items()}

    crossings, signs = [], []
    for k, (a, b, first_over) in enumerate(pairs):
        under, over = (b, a) if first_over else (a, b)
        order = ccw[k]
        i = order.index(('in', under))
        rot = [order[(i + j) % 4] for j in range(4)]
        sign = 1 if rot[1] == ('out', over) else -1

        def label(end):
            kind, p = end
            return in_edge(p) if kind == 'in' else out_edge(p)

        crossings.append([label(v) for v in rot])
        signs.append(sign)
    return Diagram(crossings, signs)


def _dt_from_walk(diagram, start, forward):
    """DT entries for the traversal starting on edge `start`."""
    seq = []
    e = start
    for _ in range(diagram.num_edges):
        if forward:
            c, p = diagram.head(e)
            seq.append((c, p != 0))
            e = diagram.next_edge(e)
        else:
            c, p = diagram.tail(e)
            seq.append((c, p != 2))
            e = diagram.crossings[c][(p + 2) % 4]
    first = {}
    dt = []
    for i, (c, over) in enumerate(seq):
        first.setdefault(c, []).append((i + 1, over))
    for i, (c, over) in enumerate(seq):
        pass_no = i + 1
        if pass_no % 2 == 0:
            continue
        (p1, o1), (p2, o2) = first[c]
        partner = p2 if p1 == pass_no else p1
        if partner % 2:
            return None
        dt.append(partner if over else -partner)
    return tuple(dt)


def to_dt(diagram, start=None):
    """DT code of a knot diagram whose first pass is the head of edge
    `start` (default the largest label, so parsed codes read back
    unchanged)."""
    if diagram.num_components != 1:
        raise MalformedCode('DT codes describe knot diagrams only.')
    if not diagram.crossings:
        return ()
    if start is None:
        start = diagram.edges[-1]
    return _dt_from_walk(diagram, start, True)


def dt_variants(diagram):
    """DT codes over all starting edges, both directions and the mirror."""
    if diagram.num_components != 1:
        raise MalformedCode('DT codes describe knot diagrams only.')
    out = set()
    for e in diagram.edges:
        for forward in (True, False):
            dt = _dt_from_walk(diagram, e, forward)
            if dt is not None:
                out.add(dt)
                out.add(tuple(-v for v in dt))
    return out


def dt_key(dt):
    return tuple((abs(v), v < 0) for v in dt)


def canonical_dt(diagram):
    """Minimal DT code over start, direction and mirror."""
    if not diagram.crossings:
        return ()
    return min(dt_variants(diagram), key=dt_key)


def format_dt(dt):
    return ' '.join(str(v) for v in dt)


def to_gauss(diagram):
    """Signed Gauss code of a knot diagram, labels 1..c in visit order."""
    if diagram.num_components != 1:
        raise MalformedCode('Gauss codes describe knot diagrams only.')
    names = {}
    out = []
    for c, over in (diagram.passes()[0] if diagram.crossings else []):
        names.setdefault(c, len(names) + 1)
        out.append('%s%d%s' % ('O' if over else 'U', names[c],
                               '+' if diagram.signs[c] > 0 else '-'))
    return ''.join(out)


__all__ = ['parse_dt', 'parse_gauss', 'to_dt', 'canonical_dt', 'dt_variants',
           'format_dt', 'to_gauss']
