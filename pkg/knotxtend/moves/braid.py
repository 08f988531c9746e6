# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Braid words, their closures and braiding a diagram by Vogel moves.
# Author: knotxtend developers
#
# License: BSD 3 clause

import networkx as nx

from ..diagram import relabel, seifert_state
from ..graph import build_graph
from ..utils.checking import check_connected
from ..utils.errors import KnotxtendError, MalformedCode
from .reidemeister import r2_plus
from .trace import MoveTrace


class BraidWord(object):

    """Braid word on `strands` strands.

    Parameters
    ----------
    strands : int
    letters : sequence of int
        i stands for sigma_i, -i for its inverse, 1 <= i < strands.

    Examples
    -----------
    >>> w = BraidWord.from_string('3: 1 -2 1 -2')
    >>> w.strands, w.exponent_sum, str(w)
    (3, 0, '3: 1 -2 1 -2')

    """
    def __init__(self, strands, letters):
        self.strands = int(strands)
        self.letters = tuple(int(i) for i in letters)
        if self.strands < 1:
            raise MalformedCode('A braid needs at least one strand.')
        for i in self.letters:
            if i == 0 or abs(i) >= self.strands:
                raise MalformedCode('Letter %d is out of range for %d'
                                    ' strands.' % (i, self.strands))

    @classmethod
    def from_string(cls, text):
        head, sep, body = text.partition(':')
        if not sep:
            raise MalformedCode('Expected "<strands>: <letters>", got %r.'
                                % text)
        try:
            return cls(int(head), [int(t) for t in body.split()])
        except ValueError:
            raise MalformedCode('Cannot parse braid word %r.' % text)

    @property
    def length(self):
        return len(self.letters)

    @property
    def exponent_sum(self):
        return sum(1 if i > 0 else -1 for i in self.letters)

    def closure(self):
        """Diagram of the closed braid, strands running upwards and
        closing on the right."""
        if not self.letters:
            return relabel([], [], free_loops=self.strands)
        cur = list(range(self.strands))
        fresh = self.strands
        rows, signs = [], []
        for i in self.letters:
            k = abs(i) - 1
            sw, se = cur[k], cur[k + 1]
            nw, ne = fresh, fresh + 1
            fresh += 2
            if i > 0:
                rows.append([se, ne, nw, sw])
                signs.append(1)
            else:
                rows.append([sw, se, ne, nw])
                signs.append(-1)
            cur[k], cur[k + 1] = nw, ne
        back = dict((label, k) for k, label in enumerate(cur))
        rows = [[back.get(v, v) for v in x] for x in rows]
        loops = sum(1 for k, label in enumerate(cur) if label == k)
        return relabel(rows, signs, free_loops=loops)

    def __eq__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        return (self.strands, self.letters) == (other.strands,
                                                other.letters)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.strands, self.letters))

    def __str__(self):
        return '%d: %s' % (self.strands, ' '.join(str(i)
                                                  for i in self.letters))

    def __repr__(self):
        return 'BraidWord(%d, %r)' % (self.strands, list(self.letters))


def _circle_of(state):
    out = {}
    for k, cyc in enumerate(state.circles):
        for e in cyc:
            out[e] = k
    return out


def defect_pairs(diagram):
    """Edge pairs (a, b) bounding a common face, lying on distinct
    Seifert circles and running the same way around the face.

    Returns
    ----------
    pairs : list of (int, int)
        By face id, then by labels.

    """
    circle = _circle_of(seifert_state(diagram))
    out = []
    for face in diagram.faces():
        darts = {}
        for c, p in face:
            label = diagram.crossings[c][p]
            darts[label] = (c, p) == diagram.tail(label)
        labels = sorted(darts)
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                if circle[a] != circle[b] and darts[a] == darts[b]:
                    out.append((a, b))
    return out


def vogel_moves(diagram, max_moves=None):
    """Apply finger moves between defect pairs until none is left.

    Returns
    ----------
    (diagram, trace) : (Diagram, MoveTrace)

    """
    c = diagram.num_crossings
    max_moves = c * c + c if max_moves is None else max_moves
    st = seifert_state(diagram)
    s, w = st.s, diagram.writhe
    trace = MoveTrace()
    d = diagram
    while True:
        pairs = defect_pairs(d)
        if not pairs:
            return d, trace
        if len(trace) >= max_moves:
            raise RuntimeError('Braiding did not finish after %d moves.'
                               % max_moves)
        for a, b in pairs:
            try:
                out = r2_plus(d, a, b, over=True)
            except KnotxtendError:
                continue
            if seifert_state(out).s == s and out.writhe == w:
                break
        else:
            raise RuntimeError('No finger move removes the defect at'
                               ' edges %d and %d.' % pairs[0])
        trace.add('r2+', {'a': a, 'b': b, 'over': True}, d, out)
        d = out


def _pure_face(diagram, circle, k):
    for i, face in enumerate(diagram.faces()):
        if all(circle[diagram.crossings[c][p]] == k for c, p in face):
            return i
    return None


def read_braid(diagram):
    """Braid word of a diagram whose Seifert circles are coherently
    nested."""
    st = seifert_state(diagram)
    if st.s == 1 and not diagram.crossings:
        return BraidWord(1, [])
    simple = nx.Graph(build_graph(diagram).graph)
    if (not nx.is_connected(simple) or
            simple.number_of_edges() != st.s - 1 or
            any(deg > 2 for _, deg in simple.degree())):
        raise ValueError('The Seifert graph is not a path.')
    circle = _circle_of(st)
    ends = sorted(v for v, deg in simple.degree() if deg <= 1)
    start, face = None, None
    for v in ends:
        face = _pure_face(diagram, circle, v)
        if face is not None:
            start = v
            break
    if start is None:
        raise ValueError('No end circle bounds a face on its own.')
    levels = [start]
    while len(levels) < st.s:
        nxt = [u for u in simple.neighbors(levels[-1]) if u not in levels]
        levels.append(nxt[0])

    faces = diagram.faces()
    index = diagram.face_index()
    sequences = []
    for k in levels:
        here = [diagram.crossings[c][p] for c, p in faces[face]]
        cut = min(e for e in here if circle[e] == k)
        left, right = diagram.left_face(cut, index), \
            diagram.right_face(cut, index)
        face = right if face == left else left
        cyc = st.circles[k]
        i = cyc.index(cut)
        sequences.append([diagram.head(e)[0] for e in cyc[i:] + cyc[:i]])

    pos = [0] * len(sequences)
    letters = []
    while len(letters) < diagram.num_crossings:
        for i in range(len(sequences) - 1):
            a, b = sequences[i], sequences[i + 1]
            if pos[i] < len(a) and pos[i + 1] < len(b) and \
                    a[pos[i]] == b[pos[i + 1]]:
                x = a[pos[i]]
                letters.append((i + 1) * diagram.signs[x])
                pos[i] += 1
                pos[i + 1] += 1
                break
        else:
            raise ValueError('The Seifert circles are not coherently'
                             ' nested.')
    return BraidWord(st.s, letters)


def vogel_braid(diagram, return_trace=False):
    """Braid word on s(D) strands with exponent sum w(D) whose closure is
    isotopic to the diagram.

    Parameters
    ----------
    diagram : Diagram
        Connected diagram.
    return_trace : bool (default: False)
        Also return the trace of finger moves.

    Returns
    ----------
    word : BraidWord

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> w = vogel_braid(parse_dt('4 6 2'))
    >>> w.strands, w.exponent_sum
    (2, 3)

    """
    check_connected(diagram, 'vogel_braid')
    if not diagram.crossings:
        word, trace = BraidWord(1, []), MoveTrace()
    else:
        d, trace = vogel_moves(diagram)
        word = read_braid(d)
    if return_trace:
        return word, trace
    return word
