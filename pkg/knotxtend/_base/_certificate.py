# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Machine-checkable outcome records of the certification tests.
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction

PASS = 'PASS'
FAIL = 'FAIL'
RESOLVED = 'RESOLVED-BY-BRANCH'
INAPPLICABLE = 'INAPPLICABLE'
VERDICTS = (PASS, FAIL, RESOLVED, INAPPLICABLE)


def _exact(value):
    """Render witnesses as JSON-safe exact values."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return '%d/%d' % (value.numerator, value.denominator)
    if isinstance(value, (list, tuple)):
        return [_exact(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _exact(v) for k, v in value.items()}
    return str(value)


class Certificate(object):

    """Outcome of an exact test.

    Parameters
    ----------
    test : str
        Name of the test that produced the certificate.
    verdict : str
        One of 'PASS', 'FAIL', 'RESOLVED-BY-BRANCH', 'INAPPLICABLE'.
    witnesses : dict (default: None)
        Exact values supporting the verdict. A FAIL carries its
        counterexample here.
    provenance : list (default: None)
        Human readable record of each step that was decided.

    """
    def __init__(self, test, verdict, witnesses=None, provenance=None):
        if verdict not in VERDICTS:
            raise ValueError('Unknown verdict %r. Choose one of %s'
                             % (verdict, ', '.join(VERDICTS)))
        self.test = test
        self.verdict = verdict
        self.witnesses = dict(witnesses or {})
        self.provenance = list(provenance or [])

    @property
    def passed(self):
        return self.verdict in (PASS, RESOLVED)

    def to_dict(self):
        return {'test': self.test,
                'verdict': self.verdict,
                'witnesses': _exact(self.witnesses),
                'provenance': [str(p) for p in self.provenance]}

    @classmethod
    def from_dict(cls, d):
        return cls(d['test'], d['verdict'], d.get('witnesses'),
                   d.get('provenance'))

    def __eq__(self, other):
        return (isinstance(other, Certificate)
                and self.to_dict() == other.to_dict())

    def __repr__(self):
        return 'Certificate(%r, %s)' % (self.test, self.verdict)


def checks_certificate(test, checks, witnesses=None):
    """Certificate from a list of ``(label, ok, detail)`` checks.

    PASS when every check holds, otherwise FAIL with the failing labels
    as witnesses.
    """
    witnesses = dict(witnesses or {})
    failed = [label for label, ok, _ in checks if not ok]
    provenance = ['%s: %s (%s)' % (label, 'ok' if ok else 'violated', detail)
                  for label, ok, detail in checks]
    if failed:
        witnesses['failed'] = failed
        return Certificate(test, FAIL, witnesses, provenance)
    return Certificate(test, PASS, witnesses, provenance)
