# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Enumeration of prime reduced alternating knot diagrams by canonical
# Dowker-Thistlethwaite codes.
# Author: knotxtend developers
#
# License: BSD 3 clause

from joblib import Parallel, delayed

from .._base import _BaseConfig
from ..diagram import parse_dt, seifert_state
from ..equivalence import is_generating
from ..invariants import signature
from ..utils import Counter
from ..utils.errors import NonRealizable, SizeCap
from .corpus import Corpus, knot_key

MAX_CROSSINGS = 10


def gauss_labels(code):
    """Crossing label of each pass 1..2n of a DT code (index 0 unused)."""
    labels = [0] * (2 * len(code) + 1)
    for k, v in enumerate(code, 1):
        labels[2 * k - 1] = k
        labels[abs(v)] = k
    return labels


def is_prime_reduced(code):
    """True when no cyclic run of 2..2n-2 passes is closed under pairing.

    A closed run is cut off by a circle meeting the diagram twice, so
    the diagram has a nugatory crossing or is a connected sum.
    """
    n = len(code)
    seq = gauss_labels(code)[1:]
    for start in range(2 * n):
        open_ = set()
        for length in range(1, 2 * n - 1):
            x = seq[(start + length - 1) % (2 * n)]
            if x in open_:
                open_.remove(x)
            else:
                open_.add(x)
            if length >= 2 and not open_:
                return False
    return True


def code_images(code):
    """Absolute DT codes of the same matching read from every start in
    both directions."""
    n = len(code)
    m = 2 * n
    partner = [0] * (m + 1)
    for k, v in enumerate(code, 1):
        partner[2 * k - 1] = abs(v)
        partner[abs(v)] = 2 * k - 1
    for direction in (1, -1):
        for shift in range(m):
            inv = {}
            for p in range(1, m + 1):
                inv[(direction * (p - 1) + shift) % m + 1] = p
            yield tuple((lambda q: (direction * (partner[q] - 1) + shift)
                         % m + 1)(inv[2 * k - 1]) for k in range(1, n + 1))


def is_canonical(code):
    """True when `code` is the lexicographic minimum of its images."""
    code = tuple(abs(v) for v in code)
    return all(code <= img for img in code_images(code))


def _extend(prefix, remaining, n, out, canonical):
    k = len(prefix) + 1
    if k > n:
        if is_prime_reduced(prefix) and (not canonical or
                                         is_canonical(prefix)):
            out.append(tuple(prefix))
        return
    for v in sorted(remaining):
        if v == 2 * k or v == 2 * k - 2 or (k == 1 and v == 2 * n):
            continue
        prefix.append(v)
        remaining.remove(v)
        _extend(prefix, remaining, n, out, canonical)
        remaining.add(v)
        prefix.pop()


def alternating_codes(n, first=None, canonical=True):
    """Canonical all-positive DT codes with `n` entries.

    The codes pass the prime and reduced test on their Gauss word and are
    minimal among the codes of the same diagram; realizability is not
    checked.

    Parameters
    ----------
    n : int
    first : int (default: None)
        Only codes starting with this entry.
    canonical : bool (default: True)
        Keep only codes minimal among their images. False returns every
        code of every diagram.

    Returns
    ----------
    codes : list of tuple

    Examples
    -----------
    >>> alternating_codes(3)
    [(4, 6, 2)]

    """
    out = []
    evens = set(range(2, 2 * n + 1, 2))
    starts = sorted(evens) if first is None else [first]
    for v in starts:
        if v == 2 or v == 2 * n:
            continue
        remaining = evens - {v}
        _extend([v], remaining, n, out, canonical)
    return sorted(out)


def _shard(n, first, filters):
    out = []
    for code in alternating_codes(n, first):
        try:
            d = parse_dt(code)
        except NonRealizable:
            continue
        if _accept(d, filters):
            out.append((code, d))
    return out


def _accept(d, filters):
    genus, generating, special, sigma = filters
    if genus is not None and seifert_state(d).genus != genus:
        return False
    if generating is not None and is_generating(d) != generating:
        return False
    if special is not None and seifert_state(d).is_special() != special:
        return False
    if sigma is not None and abs(signature(d)) != abs(sigma):
        return False
    return True


class Enumerator(_BaseConfig):

    """Prime alternating knots up to a crossing number.

    Reduced alternating diagrams of one knot are related by flypes and
    share their invariants, so the first diagram in canonical order is
    kept for each value of `knot_key`. Equal keys at different crossing
    numbers cannot come from flypes; such collisions are kept and
    reported with a warning.

    Parameters
    ----------
    max_crossings : int (default: 10)
        Largest crossing number, at most 10.
    min_crossings : int (default: 3)
    genus : int (default: None)
        Only diagrams of this canonical genus.
    generating : bool (default: None)
        Only generator diagrams (True) or only non-generators (False).
    special : bool (default: None)
        Only special (True) or non-special (False) diagrams.
    sigma : int (default: None)
        Only diagrams with this absolute signature.
    n_jobs : int (default: 1)
        The number of CPUs to use for enumerating shards of codes in
        parallel. -1 means 'all CPUs'.
    pre_dispatch : int, or string (default: '2*n_jobs')
        Controls the number of jobs that get dispatched
        during parallel execution if `n_jobs > 1` or `n_jobs=-1`.
        Reducing this number can be useful to avoid an explosion of
        memory consumption when more jobs get dispatched than CPUs can
        process.
    verbose : int (default: 0)
        Level of verbosity. If > 0, prints the number of diagrams found
        per crossing number to stderr.

    Attributes
    ----------
    diagrams_ : int
        Number of accepted diagrams before knot deduplication.
    collisions_ : list of (str, str)
        Names of knot pairs sharing `knot_key`.

    Examples
    -----------
    >>> corpus = Enumerator(max_crossings=4, genus=1).run()
    >>> corpus.codes
    ['4 6 2', '4 6 8 2']

    """
    def __init__(self, max_crossings=MAX_CROSSINGS, min_crossings=3,
                 genus=None, generating=None, special=None, sigma=None,
                 n_jobs=1, pre_dispatch='2*n_jobs', verbose=0):
        self.max_crossings = max_crossings
        self.min_crossings = min_crossings
        self.genus = genus
        self.generating = generating
        self.special = special
        self.sigma = sigma
        self.n_jobs = n_jobs
        self.pre_dispatch = pre_dispatch
        self.verbose = verbose

    def _check_params(self):
        if self.max_crossings > MAX_CROSSINGS:
            raise SizeCap('Enumeration is capped at %d crossings. Got %d'
                          % (MAX_CROSSINGS, self.max_crossings))
        if self.min_crossings < 3:
            raise ValueError('min_crossings must be >= 3. Got %d'
                             % self.min_crossings)

    def diagrams(self, n):
        """Accepted (code, Diagram) pairs with `n` crossings."""
        filters = (self.genus, self.generating, self.special, self.sigma)
        firsts = list(range(4, 2 * n, 2))
        if self.n_jobs == 1:
            shards = [_shard(n, f, filters) for f in firsts]
        else:
            parallel = Parallel(n_jobs=self.n_jobs, verbose=self.verbose,
                                pre_dispatch=self.pre_dispatch)
            shards = parallel(delayed(_shard)(n, f, filters) for f in firsts)
        return sorted((item for shard in shards for item in shard),
                      key=lambda item: item[0])

    def run(self):
        """Enumerate the knots.

        Returns
        ----------
        corpus : Corpus
            Entries named ``<n>a<i>`` in canonical code order, with the
            source 'enumeration'. Knot-key collisions between crossing
            numbers are kept and listed in `corpus.collisions`.

        """
        self._check_params()
        corpus = Corpus(name='alternating <= %d' % self.max_crossings)
        self.diagrams_ = 0
        counter = None
        if self.verbose > 0:
            total = self.max_crossings - self.min_crossings + 1
            counter = Counter(name='crossings', total=total)
        for n in range(self.min_crossings, self.max_crossings + 1):
            keys = set()
            for code, d in self.diagrams(n):
                self.diagrams_ += 1
                key = knot_key(d)
                if key in keys:
                    continue
                keys.add(key)
                corpus.add('%da%d' % (n, len(keys)), d, source='enumeration',
                           code=code, key=key)
            if counter is not None:
                counter.update()
        self.collisions_ = list(corpus.collisions)
        return corpus
