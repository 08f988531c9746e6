# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# All exact invariants of a diagram in one JSON-ready record.
# Author: knotxtend developers
#
# License: BSD 3 clause

from ..diagram import basic_stats
from .alexander import alexander, determinant, v2
from .bracket import jones
from .signature import signature
from .skein import skein_polynomial, mwf


def invariant_bundle(diagram, cap=20):
    """Invariants of a diagram as a dict of exact JSON-safe values.

    Parameters
    ----------
    diagram : Diagram
    cap : int (default: 20)
        Crossing cap of the skein polynomial; the bracket uses the same
        cap plus 4.

    Returns
    ----------
    bundle : dict
        `basic_stats` keys plus 'jones', 'skein', 'alexander' (text
        forms), 'determinant', 'mwf', and for knots 'v2' and
        'signature'. Values that do not apply are None.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> b = invariant_bundle(parse_dt('4 6 2'))
    >>> b['determinant'], b['signature'], b['mwf']
    (3, 2, 2)

    """
    stats = basic_stats(diagram)
    out = {k: (int(v) if v == int(v) else str(v)) for k, v in stats.items()}
    P = skein_polynomial(diagram, cap=cap)
    out['jones'] = str(jones(diagram, cap=cap + 4))
    out['skein'] = str(P)
    out['alexander'] = str(alexander(diagram, cap=cap))
    out['determinant'] = determinant(diagram, cap=cap)
    out['mwf'] = mwf(diagram, P=P)
    knot = diagram.num_components == 1
    out['v2'] = v2(diagram, cap=cap) if knot else None
    out['signature'] = (signature(diagram)
                        if knot and diagram.is_connected() else None)
    return out
