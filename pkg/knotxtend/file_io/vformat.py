# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Polyhedra in the V-representation text format read by cdd and lrs.
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

from ..utils.errors import MalformedCode


def write_vformat(vertices, rays, path, comment=None):
    """Write vertices and rays as a rational V-representation.

    Each row starts with 1 for a vertex and 0 for a ray.

    Parameters
    ----------
    vertices, rays : list of sequences of Fraction
    path : str
    comment : str (default: None)
        Written as a leading ``*`` line.

    """
    rows = [[1] + list(v) for v in vertices] + [[0] + list(r) for r in rays]
    if not rows:
        raise ValueError('A V-representation needs a vertex or a ray.')
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError('All vertices and rays must have %d entries.'
                         % (width - 1))
    with open(path, 'w') as f:
        if comment:
            f.write('* %s\n' % comment)
        f.write('V-representation\nbegin\n')
        f.write(' %d %d rational\n' % (len(rows), width))
        for row in rows:
            f.write(' ' + ' '.join(str(Fraction(v)) for v in row) + '\n')
        f.write('end\n')


def read_vformat(path):
    """Vertices and rays of a V-representation file.

    Returns
    ----------
    (vertices, rays) : (list of tuple, list of tuple)
        Entries are Fractions.

    """
    with open(path) as f:
        lines = [ln.strip() for ln in f]
    lines = [ln for ln in lines if ln and not ln.startswith('*')]
    try:
        start = lines.index('begin')
        stop = lines.index('end')
    except ValueError:
        raise MalformedCode('%s has no begin/end block.' % path)
    if 'V-representation' not in lines[:start]:
        raise MalformedCode('%s is not a V-representation.' % path)
    header = lines[start + 1].split()
    m, n = int(header[0]), int(header[1])
    body = lines[start + 2:stop]
    if len(body) != m:
        raise MalformedCode('line %d: expected %d rows, found %d.'
                            % (start + 2, m, len(body)))
    vertices, rays = [], []
    for row in body:
        values = [Fraction(v) for v in row.split()]
        if len(values) != n:
            raise MalformedCode('Row %r has %d entries, expected %d.'
                                % (row, len(values), n))
        (vertices if values[0] == 1 else rays).append(tuple(values[1:]))
    return vertices, rays
