# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Sharpness of the Morton-Williams-Franks braid index bound on the twist
# series of an alternating generator.
# Author: knotxtend developers
#
# License: BSD 3 clause

from itertools import chain, combinations, product

from .._base import Certificate, checks_certificate, INAPPLICABLE
from ..diagram import seifert_state
from ..equivalence import equivalence_classes, t2_twist
from ..graph import mp_bounds
from ..invariants import mwf
from ..utils import Counter
from ..utils.checking import check_knot
from ..utils.errors import PrerequisiteFails, NotGenerating


def _powerset(items):
    items = sorted(items)
    return chain.from_iterable(combinations(items, k)
                               for k in range(len(items) + 1))


def seifert_class_sets(diagram):
    """One crossing set S'' per tuple of sizes |S'' & Y_ij|.

    Each Seifert equivalence class X_i of n >= 2 crossings splits into
    its ssim classes Y_ij. Sets taking the same number of crossings from
    every Y_ij give mutant diagrams, so only the lowest ids are taken.
    At most n - 1 crossings of each X_i are used.

    Returns
    ----------
    sets : list of tuple
        Sorted crossing id tuples, the empty set first.

    """
    classes = equivalence_classes(diagram)
    per_class = []
    for X in classes.seifert:
        if len(X) < 2:
            continue
        groups = [sorted(set(Y) & set(X)) for Y in classes.ssim]
        groups = [Y for Y in groups if Y]
        options = []
        for counts in product(*[range(len(Y) + 1) for Y in groups]):
            if sum(counts) > len(X) - 1:
                continue
            options.append(tuple(sorted(x for Y, k in zip(groups, counts)
                                        for x in Y[:k])))
        per_class.append(options)
    out = []
    for choice in product(*per_class):
        out.append(tuple(sorted(x for part in choice for x in part)))
    return sorted(set(out), key=lambda s: (len(s), s))


def mwf_sharpness_test(diagram, cap=20, strict=False, verbose=0):
    """Test exactness of the MWF bound on the twist series of `diagram`.

    With S the set of crossings in every maximal independent set, the
    diagram D_A is `diagram` with one t2 twist at each crossing of A.
    The test checks

        mwf(D_A) = mwf(D) + |A|

    for A = S' | S'' with S' any subset of S. For special diagrams S''
    is empty, otherwise it runs over `seifert_class_sets`. A PASS means
    that MWF is exact on the whole series.

    Parameters
    ----------
    diagram : Diagram
        Alternating generator knot diagram.
    cap : int (default: 20)
        Crossing cap of the skein polynomial. Twisted diagrams have up to
        2 |A| more crossings.
    strict : bool (default: False)
        Raise PrerequisiteFails when mwf(D) != mpb(D) instead of
        returning an INAPPLICABLE certificate.
    verbose : int (default: 0)
        Print the number of diagrams tested to stderr.

    Returns
    ----------
    certificate : Certificate
        Checks are labeled by the twisted crossing set.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> mwf_sharpness_test(parse_dt('4 6 2')).verdict
    'PASS'

    """
    check_knot(diagram, 'The MWF sharpness test')
    if not diagram.is_alternating():
        raise NotGenerating('The MWF sharpness test needs an alternating'
                            ' diagram.')
    base = mwf(diagram, cap=cap)
    report = mp_bounds(diagram)
    witnesses = {'mwf': base, 'mpb': report.mpb,
                 'core': sorted(report.core)}
    if base != report.mpb:
        msg = 'mwf = %d differs from mpb = %d.' % (base, report.mpb)
        if strict:
            raise PrerequisiteFails(msg)
        return Certificate('mwf_sharpness', INAPPLICABLE, witnesses, [msg])

    special = seifert_state(diagram).is_special()
    extra = [()] if special else seifert_class_sets(diagram)
    sets = [tuple(sorted(a + b)) for a in _powerset(report.core)
            for b in extra]
    witnesses['special'] = special
    witnesses['sets'] = len(sets)

    counter = Counter(name='twisted diagrams', total=len(sets)) \
        if verbose else None
    checks = []
    for A in sets:
        twisted = diagram
        for x in A:
            twisted = t2_twist(twisted, x)
        value = base if not A else mwf(twisted, cap=cap + 2 * len(A))
        checks.append(('A = %s' % (list(A),), value == base + len(A),
                       'mwf = %d, expected %d' % (value, base + len(A))))
        if counter is not None:
            counter.update()
    return checks_certificate('mwf_sharpness', checks, witnesses)
