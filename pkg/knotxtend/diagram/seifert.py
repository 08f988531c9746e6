# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Seifert circles, separating circles and the canonical genus.
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

import networkx as nx

from ._diagram import over_in, over_out


class SeifertState(object):

    """Seifert circles of a diagram and the numbers derived from them.

    Attributes
    ----------
    circles : list of lists
        Each circle is the cyclic sequence of edge labels it runs along.
        Crossingless components are circles with an empty edge list.
    crossing_to_circles : list of (int, int)
        For each crossing, the circle through its incoming under-strand
        end and the circle through its incoming over-strand end.
    sides : list of str
        For each circle, the cyclic word over {'i', 'o'} of its attached
        crossings in traversal order.
    separating : list of bool
    runs : list of int
        Number of maximal runs in the cyclic side word; 1 for circles
        whose attached crossings lie on one side, 0 for bare circles.
    index : list of int
        ind(s), the number of runs of inner crossings, which is half the
        run count; 0 for circles that do not separate.
    depth : list of int
        For a separating circle, the number of other separating circles
        on its side holding fewer of them; 0 for innermost circles.
    s, s_minus, c, n : int
    chi : int
        s - c.
    genus : Fraction or int
        Canonical genus, (2 - n - chi) / 2.

    """
    def __init__(self, circles, crossing_to_circles, sides, signs, n,
                 crossing_sides=None):
        self.circles = circles
        self.crossing_to_circles = crossing_to_circles
        self.sides = sides
        self.runs = [_runs(w) for w in sides]
        self.separating = [('i' in w and 'o' in w) for w in sides]
        self.index = [r // 2 if sep else 0
                      for r, sep in zip(self.runs, self.separating)]
        if crossing_sides is None:
            self.depth = [0] * len(circles)
        else:
            self.depth = _nesting(len(circles), crossing_to_circles,
                                  crossing_sides, self.separating)
        self.s = len(circles)
        self.c = len(signs)
        self.n = n
        self.chi = self.s - self.c
        g = Fraction(2 - n - self.chi, 2)
        self.genus = int(g) if g.denominator == 1 else g
        attached = [[] for _ in circles]
        for x, (a, b) in enumerate(crossing_to_circles):
            attached[a].append(signs[x])
            attached[b].append(signs[x])
        self.valence = [len(a) for a in attached]
        self.s_minus = sum(1 for a in attached
                           if a and all(sg < 0 for sg in a))

    @property
    def num_separating(self):
        return sum(self.separating)

    def is_special(self):
        return not any(self.separating)


def _runs(word):
    if not word:
        return 0
    if len(set(word)) == 1:
        return 1
    return sum(1 for a, b in zip(word, word[1:] + word[:1]) if a != b)


def _nesting(num_circles, crossing_to_circles, crossing_sides, separating):
    """Separating circles on the sparser side of each separating circle.

    The regions left after removing the circles form a tree whose edges
    are the circles; a crossing lies in the region on its side of both
    of its circles.
    """
    uf = nx.utils.UnionFind()
    for k in range(num_circles):
        uf.union((k, 'i'))
        uf.union((k, 'o'))
    for c, (a, b) in enumerate(crossing_to_circles):
        uf.union((a, crossing_sides[c][0]), (b, crossing_sides[c][1]))
    tree = nx.MultiGraph()
    for k in range(num_circles):
        tree.add_edge(uf[(k, 'i')], uf[(k, 'o')], key=k)
    depth = []
    for k, sep in enumerate(separating):
        if not sep:
            depth.append(0)
            continue
        cut = tree.copy()
        cut.remove_edge(uf[(k, 'i')], uf[(k, 'o')], key=k)
        counts = []
        for side in 'io':
            part = nx.node_connected_component(cut, uf[(k, side)])
            counts.append(sum(1 for u, _, j in cut.edges(keys=True)
                              if separating[j] and u in part))
        depth.append(min(counts))
    return depth


def smoothing_successor(diagram, label):
    """Edge following `label` on its Seifert circle."""
    c, p = diagram.head(label)
    sign = diagram.signs[c]
    x = diagram.crossings[c]
    if p == 0:
        return x[over_out(sign)]
    return x[2]


def seifert_state(diagram):
    """Smooth every crossing respecting orientation.

    Parameters
    ----------
    diagram : Diagram

    Returns
    ----------
    state : SeifertState

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> st = seifert_state(parse_dt('4 6 8 2'))
    >>> st.s, st.chi, st.genus, st.num_separating
    (3, -1, 1, 1)

    """
    circle_of = {}
    circles = []
    for start in diagram.edges:
        if start in circle_of:
            continue
        cyc = []
        e = start
        while e not in circle_of:
            circle_of[e] = len(circles)
            cyc.append(e)
            e = smoothing_successor(diagram, e)
        circles.append(cyc)
    for _ in range(diagram.free_loops):
        circles.append([])

    crossing_to_circles = []
    for c, x in enumerate(diagram.crossings):
        crossing_to_circles.append((circle_of[x[0]],
                                    circle_of[x[over_in(diagram.signs[c])]]))

    # The arc through the incoming under end sees the other circle on its
    # left at a positive crossing and on its right at a negative one.
    sides = []
    crossing_sides = [[None, None] for _ in diagram.crossings]
    for k, cyc in enumerate(circles):
        word = []
        for e in cyc:
            c, p = diagram.head(e)
            sign = diagram.signs[c]
            left = (p == 0) == (sign > 0)
            word.append('i' if left else 'o')
            crossing_sides[c][0 if p == 0 else 1] = word[-1]
        sides.append(''.join(word))

    return SeifertState(circles, crossing_to_circles, sides,
                        diagram.signs, diagram.num_components,
                        crossing_sides)


def basic_stats(diagram):
    """Crossing, writhe and Seifert counts of a diagram.

    Returns
    ----------
    stats : dict
        Keys 'c', 'c_plus', 'c_minus', 'w', 's', 's_minus', 'chi', 'g', 'n'.

    """
    st = seifert_state(diagram)
    return {'c': diagram.num_crossings,
            'c_plus': diagram.c_plus,
            'c_minus': diagram.c_minus,
            'w': diagram.writhe,
            's': st.s,
            's_minus': st.s_minus,
            'chi': st.chi,
            'g': st.genus,
            'n': diagram.num_components}
