# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Reading and writing files of DT and Gauss codes, one diagram per line.
# Author: knotxtend developers
#
# License: BSD 3 clause

from ..diagram import parse_dt, parse_gauss, format_dt, to_dt, to_gauss
from ..utils.errors import KnotxtendError

_PARSERS = {'dt': parse_dt, 'gauss': parse_gauss}


def _lines(source):
    if isinstance(source, str):
        with open(source) as f:
            return f.read().splitlines()
    return list(source)


def parse_line(line, kind='dt', lineno=None):
    """Name and Diagram of a line ``[name:] code``.

    Errors are re-raised with a ``line N:`` prefix when `lineno` is given.
    """
    if kind not in _PARSERS:
        raise ValueError('Unknown code kind %r. Choose one of %s'
                         % (kind, ', '.join(sorted(_PARSERS))))
    name = None
    code = line.split('#', 1)[0].strip()
    if ':' in code:
        name, code = [s.strip() for s in code.split(':', 1)]
    try:
        diagram = _PARSERS[kind](code)
    except KnotxtendError as e:
        if lineno is None:
            raise
        raise type(e)('line %d: %s' % (lineno, e))
    return name, diagram


def read_codes(source, kind='dt'):
    """Read a code file.

    Lines hold ``name: code`` or a bare code; blank lines and text after
    ``#`` are ignored. A line holding only ``-`` or ``unknot`` after the
    name is the 0-crossing diagram.

    Parameters
    ----------
    source : str or iterable of str
        File name, or the lines themselves.
    kind : {'dt', 'gauss'} (default: 'dt')

    Returns
    ----------
    entries : list of (str, Diagram)
        Unnamed lines are named ``line<N>``.

    Examples
    -----------
    >>> [name for name, _ in read_codes(['3_1: 4 6 2', '4 6 8 2'])]
    ['3_1', 'line2']

    """
    out = []
    for lineno, raw in enumerate(_lines(source), 1):
        text = raw.split('#', 1)[0].strip()
        if not text:
            continue
        head, _, tail = text.rpartition(':')
        if tail.strip() in ('-', 'unknot'):
            text = '%s:' % head if head else ''
        name, diagram = parse_line(text, kind, lineno)
        out.append((name or 'line%d' % lineno, diagram))
    return out


def format_code(diagram, kind='dt'):
    if kind == 'dt':
        return format_dt(to_dt(diagram)) if diagram.num_crossings else '-'
    if kind == 'gauss':
        return to_gauss(diagram) if diagram.num_crossings else '-'
    raise ValueError('Unknown code kind %r. Choose one of %s'
                     % (kind, ', '.join(sorted(_PARSERS))))


def write_codes(entries, path, kind='dt'):
    """Write ``name: code`` lines readable by `read_codes`."""
    with open(path, 'w') as f:
        for name, diagram in entries:
            f.write('%s: %s\n' % (name, format_code(diagram, kind)))
