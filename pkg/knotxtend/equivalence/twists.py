# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Twists at crossings and the twist series of generating diagrams.
# Author: knotxtend developers
#
# License: BSD 3 clause

from itertools import product

from ..diagram import (Diagram, switch_crossing, switch_crossings,
                       parse_dt, canonical_dt, format_dt)
from ..utils.checking import check_crossing
from ..utils.errors import (DimensionMismatch, ZeroOnSingleton,
                            NotGenerating, MalformedCode)
from .classes import equivalence_classes


def t2_twist(diagram, x):
    """Insert two crossings next to `x`, forming a twist of three.

    The new crossings get ids c and c + 1, have the sign of `x` and are
    ~-equivalent to it. Crossing count goes up by 2, the number of
    Seifert circles by 2, and the genus is unchanged.

    Parameters
    ----------
    diagram : Diagram
    x : int
        Crossing id.

    Returns
    ----------
    diagram : Diagram

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> t2_twist(parse_dt('4 6 2'), 0).num_crossings
    5

    """
    check_crossing(diagram, x)
    sign = diagram.signs[x]
    base = diagram if sign > 0 else switch_crossing(diagram, x)
    x0, x1, x2, x3 = base.crossings[x]
    f1, f2, g1, g2 = range(max(diagram.edges) + 1, max(diagram.edges) + 5)
    crossings = list(base.crossings)
    crossings[x] = (f2, f1, x2, x3)
    crossings.append((f1, f2, g1, g2))
    crossings.append((x0, x1, g2, g1))
    signs = list(base.signs) + [1, 1]
    out = Diagram(crossings, signs, diagram.free_loops)
    if sign < 0:
        n = diagram.num_crossings
        out = switch_crossings(out, [x, n, n + 1])
    return out


class TwistVector(object):

    """Point of the twist series of a generating diagram.

    Parameters
    ----------
    generator : Diagram
        Generating knot diagram.
    x : sequence of int
        One entry per ~-class of `generator`, in the order of
        `equivalence_classes(generator).sim`. Entries count crossings of
        the class's own sign: for a single crossing class x >= 1 stands
        for 2x - 1 crossings, for a two crossing class x > 0 stands for
        2x crossings and x = 0 for the class with one crossing switched
        (a trivial clasp). Negative entries switch the class first.

    """
    def __init__(self, generator, x):
        self.generator = generator
        self.x = tuple(int(v) for v in x)

    def __str__(self):
        return '%s|%s' % (format_dt(canonical_dt(self.generator)),
                          ','.join(str(v) for v in self.x))

    def __repr__(self):
        return 'TwistVector(%s)' % self

    def __eq__(self, other):
        return (isinstance(other, TwistVector)
                and self.generator == other.generator
                and self.x == other.x)

    def __hash__(self):
        return hash((self.generator, self.x))

    @classmethod
    def from_string(cls, text):
        """Parse 'dt code|x1,x2,...' as written by `str`."""
        if text.count('|') != 1:
            raise MalformedCode("Expected 'dt|x1,...,xt'. Got %r" % text)
        code, values = text.split('|')
        try:
            x = [int(v) for v in values.split(',') if v.strip()]
        except ValueError:
            raise MalformedCode('Twist entries must be integers. Got %r'
                                % values)
        return cls(parse_dt(code), x)


def _twist_times(diagram, x, times):
    for _ in range(times):
        diagram = t2_twist(diagram, x)
    return diagram


def realize_series(generator, v):
    """Diagram of the twist series of `generator` at vector `v`.

    Parameters
    ----------
    generator : Diagram
        Generating knot diagram (every ~-class has at most 2 crossings).
    v : TwistVector or sequence of int

    Returns
    ----------
    diagram : Diagram
        Crossings of `generator` keep their ids.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> realize_series(parse_dt('4 6 8 2'), [2, 1]).num_crossings
    6

    """
    x = v.x if isinstance(v, TwistVector) else tuple(v)
    classes = equivalence_classes(generator).sim
    if len(x) != len(classes):
        raise DimensionMismatch('The diagram has %d ~-classes but the twist'
                                ' vector has %d entries.'
                                % (len(classes), len(x)))
    out = generator
    for cls, xi in zip(classes, x):
        low = cls[0]
        if len(cls) == 1:
            if xi == 0:
                raise ZeroOnSingleton('Twist entry 0 is undefined for the'
                                      ' single crossing class {%d}.' % low)
            if xi > 0:
                out = _twist_times(out, low, xi - 1)
            else:
                out = _twist_times(switch_crossing(out, low), low, -xi)
        elif len(cls) == 2:
            if xi > 0:
                out = _twist_times(out, low, xi - 1)
            elif xi == 0:
                out = switch_crossing(out, cls[1])
            else:
                out = _twist_times(switch_crossings(out, cls), low, -1 - xi)
        else:
            raise NotGenerating('The ~-class %r has %d crossings; series'
                                ' are defined over generating diagrams.'
                                % (cls, len(cls)))
    return out


def twist_sites(diagram):
    """Lowest-id positive crossing of each ~-class holding a positive
    crossing, with its class."""
    sites = []
    for cls in equivalence_classes(diagram).sim:
        positive = [c for c in cls if diagram.signs[c] > 0]
        if positive:
            sites.append((positive[0], cls))
    return sites


def x_star(diagram):
    """All diagrams from at most one twist at one positive crossing of
    every class holding a positive crossing.

    Returns
    ----------
    diagrams : list of Diagram
        2 ** k diagrams for k such classes, ordered by the binary choice
        vector (no twists first).

    """
    if not diagram.crossings:
        return [diagram]
    sites = [c for c, _ in twist_sites(diagram)]
    out = []
    for choice in product((0, 1), repeat=len(sites)):
        d = diagram
        for c, twist in zip(sites, choice):
            if twist:
                d = t2_twist(d, c)
        out.append(d)
    return out
