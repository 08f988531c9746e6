# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Oriented link diagrams as signed planar 4-valent maps.
# Author: knotxtend developers
#
# License: BSD 3 clause

from collections import defaultdict

from ..utils.errors import MalformedCode, NonRealizable


# Position conventions at a crossing (counterclockwise 0, 1, 2, 3):
#   0 incoming under-strand end, 2 outgoing under-strand end;
#   sign +1: over-strand enters at 3 and leaves at 1;
#   sign -1: over-strand enters at 1 and leaves at 3.

def over_in(sign):
    return 3 if sign > 0 else 1


def over_out(sign):
    return 1 if sign > 0 else 3


def is_incoming(position, sign):
    return position == 0 or position == over_in(sign)


class Diagram(object):

    """Oriented link diagram encoded as a signed planar map.

    Parameters
    ----------
    crossings : sequence of 4-tuples of int
        Edge labels at positions 0..3 of each crossing, counterclockwise,
        position 0 being the incoming under-strand end. Crossing ids are
        list indices.
    signs : sequence of {+1, -1}
        Crossing signs (writhe contributions).
    free_loops : int (default: 0)
        Number of crossingless components.
    check : bool (default: True)
        Validate the edge pairing, the orientation and planarity.

    Attributes
    ----------
    crossings : tuple of tuples
    signs : tuple of int
    free_loops : int

    Examples
    --------
    >>> trefoil = Diagram([(0, 4, 1, 3), (2, 0, 3, 5), (4, 2, 5, 1)],
    ...                   [1, 1, 1])
    >>> trefoil.writhe
    3

    """
    __slots__ = ('crossings', 'signs', 'free_loops', '_ends', '_faces')

    def __init__(self, crossings, signs, free_loops=0, check=True):
        self.crossings = tuple(tuple(int(v) for v in x) for x in crossings)
        self.signs = tuple(int(s) for s in signs)
        self.free_loops = int(free_loops)
        self._faces = None
        if len(self.signs) != len(self.crossings):
            raise MalformedCode('Got %d crossings but %d signs.'
                                % (len(self.crossings), len(self.signs)))
        ends = defaultdict(list)
        for c, x in enumerate(self.crossings):
            if len(x) != 4:
                raise MalformedCode('Crossing %d has %d edge ends, expected'
                                    ' 4.' % (c, len(x)))
            if self.signs[c] not in (1, -1):
                raise MalformedCode('Crossing %d has sign %r.'
                                    % (c, self.signs[c]))
            for p, label in enumerate(x):
                ends[label].append((c, p))
        self._ends = dict(ends)
        if self.free_loops < 0:
            raise MalformedCode('Negative number of free loops.')
        if not self.crossings and not self.free_loops:
            self.free_loops = 1
        if check:
            self._validate()

    def _validate(self):
        for label, ends in self._ends.items():
            if len(ends) != 2:
                raise MalformedCode('Edge %d has %d ends, expected 2.'
                                    % (label, len(ends)))
            flags = [is_incoming(p, self.signs[c]) for c, p in ends]
            if sorted(flags) != [False, True]:
                raise MalformedCode('Edge %d is not oriented consistently'
                                    ' (one head and one tail).' % label)
        if not self.is_planar():
            raise NonRealizable('The rotation system is not planar.')

    @property
    def num_crossings(self):
        return len(self.crossings)

    @property
    def edges(self):
        """Sorted edge labels."""
        return sorted(self._ends)

    @property
    def num_edges(self):
        return len(self._ends)

    def ends(self, label):
        return self._ends[label]

    def tail(self, label):
        """(crossing, position) where the edge starts."""
        for c, p in self._ends[label]:
            if not is_incoming(p, self.signs[c]):
                return c, p

    def head(self, label):
        """(crossing, position) where the edge ends."""
        for c, p in self._ends[label]:
            if is_incoming(p, self.signs[c]):
                return c, p

    def other_end(self, c, p):
        a, b = self._ends[self.crossings[c][p]]
        if a == (c, p):
            return b
        return a

    def next_edge(self, label):
        """Edge following `label` along its strand."""
        c, p = self.head(label)
        return self.crossings[c][(p + 2) % 4]

    def is_over(self, c, p):
        return p % 2 == 1

    @property
    def c_plus(self):
        return sum(1 for s in self.signs if s > 0)

    @property
    def c_minus(self):
        return sum(1 for s in self.signs if s < 0)

    @property
    def writhe(self):
        return sum(self.signs)

    # components ----------------------------------------------------------

    def components(self):
        """Edge cycles of the components with crossings, in traversal
        order, each starting at its smallest label and sorted by it."""
        seen = set()
        out = []
        for start in self.edges:
            if start in seen:
                continue
            cycle = []
            e = start
            while e not in seen:
                seen.add(e)
                cycle.append(e)
                e = self.next_edge(e)
            out.append(cycle)
        return out

    @property
    def num_components(self):
        return len(self.components()) + self.free_loops

    def component_of(self):
        """Map edge label -> component index."""
        out = {}
        for i, cycle in enumerate(self.components()):
            for e in cycle:
                out[e] = i
        return out

    def passes(self, component=None):
        """Sequence of (crossing, is_over) along each component."""
        out = []
        for i, cycle in enumerate(self.components()):
            if component is not None and i != component:
                continue
            seq = []
            for e in cycle:
                c, p = self.head(e)
                seq.append((c, p != 0))
            out.append(seq)
        return out

    def gauss_sequence(self):
        """Crossing ids along the first component (knot diagrams)."""
        return [c for c, _ in self.passes()[0]] if self.crossings else []

    def connected_parts(self):
        """Crossing sets of the connected pieces (free loops excluded)."""
        parent = list(range(self.num_crossings))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for label, ((c1, _), (c2, _)) in self._ends.items():
            parent[find(c1)] = find(c2)
        groups = defaultdict(list)
        for c in range(self.num_crossings):
            groups[find(c)].append(c)
        return sorted(groups.values())

    def is_connected(self):
        if not self.crossings:
            return self.free_loops == 1
        return self.free_loops == 0 and len(self.connected_parts()) == 1

    def is_alternating(self):
        for seq in self.passes():
            for (_, a), (_, b) in zip(seq, seq[1:] + seq[:1]):
                if a == b:
                    return False
        return True

    # faces ---------------------------------------------------------------

    def faces(self):
        """Faces as lists of darts (crossing, position).

        A dart leaves its crossing through the given position. Following
        a dart to the other end (c', p') continues with (c', p' - 1); the
        traced face lies to the left of the direction of travel. Corner k
        (between positions k and k + 1) belongs to the face of dart (c, k).
        """
        if self._faces is None:
            seen = set()
            faces = []
            for c in range(self.num_crossings):
                for p in range(4):
                    if (c, p) in seen:
                        continue
                    face = []
                    dart = (c, p)
                    while dart not in seen:
                        seen.add(dart)
                        face.append(dart)
                        c2, p2 = self.other_end(*dart)
                        dart = (c2, (p2 - 1) % 4)
                    faces.append(face)
            self._faces = faces
        return self._faces

    def face_index(self):
        """Map dart -> face id."""
        out = {}
        for i, face in enumerate(self.faces()):
            for dart in face:
                out[dart] = i
        return out

    def left_face(self, label, index=None):
        index = index or self.face_index()
        return index[self.tail(label)]

    def right_face(self, label, index=None):
        index = index or self.face_index()
        return index[self.head(label)]

    def is_planar(self):
        if not self.crossings:
            return True
        parts = self.connected_parts()
        index = self.face_index()
        for part in parts:
            faces = set(index[(c, p)] for c in part for p in range(4))
            if len(faces) != len(part) + 2:
                return False
        return True

    # equality ------------------------------------------------------------

    def _key(self):
        return (self.crossings, self.signs, self.free_loops)

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return 'Diagram(crossings=%r, signs=%r, free_loops=%d)' % (
            [list(x) for x in self.crossings], list(self.signs),
            self.free_loops)


def unknot():
    """The 0-crossing unknot diagram."""
    return Diagram([], [], free_loops=1)


def relabel(crossings, signs, free_loops=0, check=True):
    """Build a Diagram after renumbering edge labels to 0, 1, 2, ...
    in order of first appearance."""
    mapping = {}
    for x in crossings:
        for label in x:
            if label not in mapping:
                mapping[label] = len(mapping)
    return Diagram([[mapping[v] for v in x] for x in crossings], signs,
                   free_loops=free_loops, check=check)
