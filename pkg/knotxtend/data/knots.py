# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Small table of prime knots and named fixture diagrams.
# Author: knotxtend developers
#
# License: BSD 3 clause

import os

import pandas as pd

from ..diagram import Diagram, parse_dt, parse_gauss, connected_sum, mirror

this_dir, this_filename = os.path.split(__file__)
DATA_PATH = os.path.join(this_dir, "data", "knots.csv")


def knot_table():
    """Alternating prime knots up to 7 crossings and the (2, 9) torus knot.

    Returns
    --------
    table : pandas.DataFrame
        Columns 'name', 'dt', 'crossings', 'alternating'. The 'dt' column
        holds DT codes as strings ('' for the unknot).

    """
    return pd.read_csv(DATA_PATH, dtype={'dt': str}, keep_default_na=False)


def knot(name):
    """Diagram of a knot in `knot_table()` by name, e.g. '4_1'."""
    table = knot_table()
    row = table[table['name'] == name]
    if not len(row):
        raise ValueError('Unknown knot %r. Known: %s'
                         % (name, ', '.join(table['name'])))
    return parse_dt(row['dt'].iloc[0])


def trefoil(sign=1):
    """Positive (sign=1) or negative trefoil."""
    d = parse_dt('4 6 2')
    return d if sign > 0 else mirror(d)


def figure_eight():
    return parse_dt('4 6 8 2')


def torus_2(n):
    """Standard diagram of the (2, n) torus link, n >= 2."""
    if n < 2:
        raise ValueError('n must be at least 2. Got %d' % n)
    # closure of the positive 2-braid; L_k = 2k and R_k = 2k + 1 are the
    # left and right edges above crossing k
    m = 2 * n
    crossings = [((2 * k - 1) % m, (2 * k + 1) % m, 2 * k, (2 * k - 2) % m)
                 for k in range(n)]
    return Diagram(crossings, [1] * n)


def kink(sign=1):
    """One-crossing unknot diagram."""
    return parse_gauss('O1%sU1%s' % (('+', '+') if sign > 0 else ('-', '-')))


def kinked_trefoil():
    """Positive trefoil with one extra kink (4 crossings)."""
    return parse_gauss('O1+U2+O3+U1+O2+U3+O4-U4-')


def trefoil_sum():
    """Connected sum of two positive trefoils (6 crossings)."""
    return connected_sum(trefoil(), trefoil())
