# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Named collections of diagrams with file provenance.
# Author: knotxtend developers
#
# License: BSD 3 clause

import warnings
from collections import namedtuple

import pandas as pd
from joblib import Parallel, delayed

from ..diagram import canonical_code, canonical_dt, format_dt
from ..invariants import alexander, jones, signature, determinant
from ..invariants import invariant_bundle
from ..file_io import read_codes, load_diagrams, find_code_files, code_kind


CorpusEntry = namedtuple('CorpusEntry', ['name', 'diagram', 'source',
                                         'code'])


def knot_key(diagram):
    """Knot identity at desk scale: Delta, V up to mirror, |sigma|, det.

    Reduced alternating diagrams of one knot share the key; distinct
    knots sharing it would be mutants or similar coincidences.
    """
    V = jones(diagram)
    return (str(alexander(diagram)),
            min(str(V), str(V.substitute(-1))),
            abs(signature(diagram)),
            determinant(diagram))


def _display_code(diagram):
    if diagram.num_components != 1:
        return None
    return format_dt(canonical_dt(diagram)) if diagram.num_crossings else '-'


class Corpus(object):

    """Ordered set of named diagrams.

    Entries are unique by (name, canonical code). For knots the
    `knot_key` of each entry is kept; an entry whose key matches an
    earlier entry with a different diagram is recorded in `collisions`
    and reported with a warning, but not merged.

    Parameters
    ----------
    name : str (default: None)

    Attributes
    ----------
    collisions : list of (str, str)
        Names of entry pairs sharing a `knot_key`.

    Examples
    -----------
    >>> from knotxtend.data import trefoil, figure_eight
    >>> c = Corpus()
    >>> c.add('3_1', trefoil())
    >>> c.add('4_1', figure_eight())
    >>> c.names
    ['3_1', '4_1']

    """
    def __init__(self, name=None):
        self.name = name
        self.entries = []
        self.collisions = []
        self._seen = set()
        self._keys = {}

    def add(self, name, diagram, source=None, code=None, check=True,
            key=None):
        """Add an entry.

        Parameters
        ----------
        name : str
        diagram : Diagram
        source : str (default: None)
            File name or 'enumeration'.
        code : str or sequence of int (default: None)
            Display code; the minimal DT code for knots if None.
        check : bool (default: True)
            Compute the knot key and look for collisions.
        key : tuple (default: None)
            Precomputed `knot_key` of the diagram.

        """
        ident = (name, canonical_code(diagram))
        if ident in self._seen:
            raise ValueError('Entry %r is already in the corpus.' % name)
        if code is None:
            code = _display_code(diagram)
        elif not isinstance(code, str):
            code = format_dt(code)
        if check and diagram.num_components == 1:
            if key is None:
                key = knot_key(diagram)
            other = self._keys.get(key)
            if other is not None and other[1] != ident[1]:
                warnings.warn('Entries %s and %s share Delta, V, sigma and'
                              ' det; possible mutants.' % (other[0], name))
                self.collisions.append((other[0], name))
            else:
                self._keys.setdefault(key, ident)
        self._seen.add(ident)
        self.entries.append(CorpusEntry(name, diagram, source, code))

    @classmethod
    def from_file(cls, path, kind=None, check=True):
        """Corpus of a DT, Gauss or JSON file; kind from the extension."""
        if kind is None:
            kind = code_kind(path)
        corpus = cls(name=path)
        corpus.extend_from_file(path, kind, check)
        return corpus

    @classmethod
    def from_directory(cls, path, recursive=False, check=True):
        """Corpus of all code files below `path`, in sorted file order."""
        corpus = cls(name=path)
        for fname in find_code_files(path, recursive=recursive):
            corpus.extend_from_file(fname, code_kind(fname), check)
        return corpus

    def extend_from_file(self, path, kind, check=True):
        if kind == 'json':
            entries = load_diagrams(path)
        else:
            entries = read_codes(path, kind)
        for name, diagram in entries:
            self.add(name, diagram, source=path, check=check)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def names(self):
        return [e.name for e in self.entries]

    @property
    def diagrams(self):
        return [e.diagram for e in self.entries]

    @property
    def codes(self):
        return [e.code for e in self.entries]

    def filter(self, predicate):
        """Corpus of the entries whose diagram satisfies `predicate`."""
        out = Corpus(name=self.name)
        for e in self.entries:
            if predicate(e.diagram):
                out.add(e.name, e.diagram, e.source, e.code, check=False)
        return out

    def bundles(self, cap=20, n_jobs=1, pre_dispatch='2*n_jobs', verbose=0):
        """`invariant_bundle` of every entry, in corpus order."""
        if n_jobs == 1:
            return [invariant_bundle(d, cap) for d in self.diagrams]
        parallel = Parallel(n_jobs=n_jobs, verbose=verbose,
                            pre_dispatch=pre_dispatch)
        return parallel(delayed(invariant_bundle)(d, cap)
                        for d in self.diagrams)

    def to_frame(self, bundles=None):
        """DataFrame with columns name, code, source, crossings and, when
        given, one column per bundle key."""
        df = pd.DataFrame({'name': self.names,
                           'code': self.codes,
                           'source': [e.source for e in self.entries],
                           'crossings': [d.num_crossings
                                         for d in self.diagrams]})
        if bundles is not None:
            extra = pd.DataFrame(list(bundles))
            extra = extra.drop(columns=[c for c in extra.columns
                                        if c in df.columns])
            df = pd.concat([df, extra], axis=1)
        return df

    def __repr__(self):
        return 'Corpus(%r, %d entries)' % (self.name, len(self))
