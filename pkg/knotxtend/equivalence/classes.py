# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Linkedness of crossings and the crossing equivalence relations.
# Author: knotxtend developers
#
# License: BSD 3 clause

import numpy as np

from ..diagram import seifert_state
from ..utils.checking import check_knot


def linking_matrix(diagram):
    """Boolean matrix L with L[p, q] True iff p and q are linked.

    Two crossings of a knot diagram are linked when they are met in the
    cyclic order p q p q along the knot.
    """
    check_knot(diagram, 'Linkedness')
    c = diagram.num_crossings
    where = [[] for _ in range(c)]
    for i, x in enumerate(diagram.gauss_sequence()):
        where[x].append(i)
    first = np.array([w[0] for w in where], dtype=int)
    second = np.array([w[1] for w in where], dtype=int)
    # q is linked with p iff exactly one visit of q lies between p's visits
    inside_1 = (first[None, :] > first[:, None]) & \
        (first[None, :] < second[:, None])
    inside_2 = (second[None, :] > first[:, None]) & \
        (second[None, :] < second[:, None])
    return inside_1 ^ inside_2


def _partition(n, related):
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p in range(n):
        for q in range(p + 1, n):
            if related(p, q):
                parent[find(q)] = find(p)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


class EquivClasses(object):

    """Crossing equivalence classes of a diagram.

    Attributes
    ----------
    linked : numpy.ndarray of bool, shape (c, c), or None for links
    twist : list of lists
        Classes of twist equivalence (same linked set outside the pair).
    sim : list of lists
        Twist equivalent and not linked; the classes counted by t(D).
    ssim : list of lists
        Twist equivalent and linked.
    seifert : list of lists
        Crossings joining the same two Seifert circles.
    t : int
        Number of `sim` classes.
    sizes : list of int
        t_i(D), the size of each `sim` class.

    Classes are sorted lists of crossing ids, ordered by their smallest
    member.

    """
    def __init__(self, linked, twist, sim, ssim, seifert):
        self.linked = linked
        self.twist = twist
        self.sim = sim
        self.ssim = ssim
        self.seifert = seifert

    @property
    def t(self):
        return len(self.sim)

    @property
    def sizes(self):
        return [len(cl) for cl in self.sim]

    def sim_class_of(self, x):
        for i, cl in enumerate(self.sim):
            if x in cl:
                return i
        raise KeyError(x)

    def __repr__(self):
        return 'EquivClasses(t=%d, sizes=%r)' % (self.t, self.sizes)


def _seifert_classes(diagram):
    st = seifert_state(diagram)
    pairs = [tuple(sorted(p)) for p in st.crossing_to_circles]
    return _partition(diagram.num_crossings,
                      lambda p, q: pairs[p] == pairs[q])


def equivalence_classes(diagram, seifert_only=False):
    """All four crossing partitions of a knot diagram.

    Parameters
    ----------
    diagram : Diagram
    seifert_only : bool (default: False)
        Only compute Seifert equivalence, which is also defined for
        links.

    Returns
    ----------
    classes : EquivClasses

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> equivalence_classes(parse_dt('4 6 8 2')).sizes
    [2, 2]

    """
    seifert = _seifert_classes(diagram)
    if seifert_only:
        return EquivClasses(None, None, None, None, seifert)
    check_knot(diagram, 'Crossing equivalence')
    n = diagram.num_crossings
    L = linking_matrix(diagram)

    def twist_eq(p, q):
        mask = np.ones(n, dtype=bool)
        mask[[p, q]] = False
        return bool(np.all(L[p, mask] == L[q, mask]))

    twist = _partition(n, twist_eq)
    sim = _partition(n, lambda p, q: twist_eq(p, q) and not L[p, q])
    ssim = _partition(n, lambda p, q: twist_eq(p, q) and bool(L[p, q]))
    return EquivClasses(L, twist, sim, ssim, seifert)


def is_generating(diagram):
    """True iff every ~-class of the (alternating, reduced) knot diagram
    has at most two crossings."""
    return all(s <= 2 for s in equivalence_classes(diagram).sizes)


def class_sign(diagram, cls):
    """Sign of the class: the sign of its smallest crossing."""
    return diagram.signs[min(cls)]


def is_mixed(diagram, cls):
    return len(set(diagram.signs[x] for x in cls)) > 1
