# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# JSON dumps of diagrams and certificates with a stable content digest.
# Author: knotxtend developers
#
# License: BSD 3 clause

import hashlib
import json

from .._base import Certificate
from ..diagram import Diagram
from ..utils.errors import MalformedCode

SCHEMA_VERSION = 1


def diagram_to_dict(diagram):
    return {'version': SCHEMA_VERSION,
            'crossings': [list(x) for x in diagram.crossings],
            'signs': list(diagram.signs),
            'free_loops': diagram.free_loops}


def diagram_from_dict(d):
    """Diagram of a dict written by `diagram_to_dict`."""
    try:
        version = d.get('version', SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise MalformedCode('Unsupported diagram schema version %r.'
                                % version)
        return Diagram(d['crossings'], d['signs'], d.get('free_loops', 0))
    except (KeyError, TypeError, AttributeError) as e:
        raise MalformedCode('Not a diagram record: %s' % e)


def dumps(obj):
    """Canonical JSON text: sorted keys, no whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(',', ':'))


def diagram_digest(diagram):
    """blake2b digest of the canonical JSON of a diagram.

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> len(diagram_digest(parse_dt('4 6 2')))
    32

    """
    text = dumps(diagram_to_dict(diagram)).encode('utf-8')
    return hashlib.blake2b(text, digest_size=16).hexdigest()


def dump_diagram(diagram, path):
    with open(path, 'w') as f:
        f.write(dumps(diagram_to_dict(diagram)))
        f.write('\n')


def load_diagrams(source):
    """Diagrams of a JSON file or text.

    The document holds a single diagram record, a list of records or an
    object mapping names to records.

    Returns
    ----------
    entries : list of (str, Diagram)

    """
    if isinstance(source, str) and not source.lstrip().startswith(('{', '[')):
        with open(source) as f:
            source = f.read()
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as e:
        raise MalformedCode('line %d: %s' % (e.lineno, e.msg))
    if isinstance(doc, list):
        return [(r.get('name', 'entry%d' % i), diagram_from_dict(r))
                for i, r in enumerate(doc, 1)]
    if 'crossings' in doc:
        return [(doc.get('name', 'entry1'), diagram_from_dict(doc))]
    return [(name, diagram_from_dict(r)) for name, r in sorted(doc.items())]


def load_diagram(path):
    entries = load_diagrams(path)
    if len(entries) != 1:
        raise MalformedCode('Expected one diagram in %s, found %d.'
                            % (path, len(entries)))
    return entries[0][1]


def certificate_to_json(certificate, name=None, code=None):
    record = certificate.to_dict()
    if name is not None:
        record['name'] = name
    if code is not None:
        record['code'] = code
    return dumps(record)


def certificate_from_json(text):
    return Certificate.from_dict(json.loads(text))
