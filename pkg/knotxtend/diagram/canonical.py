# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Canonical codes for diagram comparison.
# Author: knotxtend developers
#
# License: BSD 3 clause

from ._diagram import Diagram
from .surgery import reverse, flip


def _walk_code(diagram, start):
    """Relabel the piece holding edge `start` by a traversal from it.

    Edges get consecutive labels along their strands; when a strand
    closes up, the walk resumes at the smallest unlabeled position of
    the earliest numbered crossing.
    """
    cid = {}
    eid = {}
    order = []

    def touch(c):
        if c not in cid:
            cid[c] = len(cid)
            order.append(c)

    touch(diagram.tail(start)[0])
    e = start
    while True:
        while e not in eid:
            eid[e] = len(eid)
            touch(diagram.head(e)[0])
            e = diagram.next_edge(e)
        e = None
        for c in order:
            for p in range(4):
                label = diagram.crossings[c][p]
                if label not in eid:
                    e = label
                    break
            if e is not None:
                break
        if e is None:
            break
        touch(diagram.tail(e)[0])
    return tuple((tuple(eid[v] for v in diagram.crossings[c]),
                  diagram.signs[c]) for c in order)


def _part_code(diagram, part):
    labels = set(diagram.crossings[c][p] for c in part for p in range(4))
    return min(_walk_code(diagram, e) for e in labels)


def canonical_code(diagram, symmetric=False):
    """Hashable code equal for diagrams that differ only by relabeling.

    Parameters
    ----------
    diagram : Diagram
    symmetric : bool (default: False)
        Also identify a diagram with its reverse and with the diagram
        turned over, both of which keep the unoriented link type.

    Returns
    ----------
    code : tuple
        Sorted part codes followed by the number of free loops.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt, parse_gauss
    >>> a = canonical_code(parse_dt('4 6 2'))
    >>> a == canonical_code(parse_gauss('O1+U2+O3+U1+O2+U3+'))
    True

    """
    variants = [diagram]
    if symmetric:
        r = reverse(diagram)
        variants += [r, flip(diagram), flip(r)]
    best = None
    for d in variants:
        parts = tuple(sorted(_part_code(d, part)
                             for part in d.connected_parts()))
        code = (parts, d.free_loops)
        if best is None or code < best:
            best = code
    return best


def same_diagram(a, b, symmetric=False):
    return canonical_code(a, symmetric) == canonical_code(b, symmetric)


def from_canonical_code(code):
    """Diagram of a code returned by `canonical_code`."""
    parts, free_loops = code
    crossings, signs = [], []
    shift = 0
    for part in parts:
        top = 0
        for row, sign in part:
            crossings.append([v + shift for v in row])
            signs.append(sign)
            top = max([top] + [v + 1 for v in row])
        shift += top
    return Diagram(crossings, signs, free_loops)


__all__ = ['canonical_code', 'same_diagram', 'from_canonical_code']
