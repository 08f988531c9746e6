# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from knotxtend.utils import assert_raises, assert_verdict
from knotxtend.utils.errors import KnotxtendError, SizeCap
from knotxtend._base import Certificate


def test_assert_raises():
    def f(x):
        raise SizeCap('capped at %d' % x)

    assert_raises(SizeCap, 'capped at 3', f, 3)
    assert_raises(ValueError, None, f, 3)
    try:
        assert_raises(SizeCap, 'capped at 4', f, 3)
    except AssertionError:
        pass
    else:
        raise AssertionError('message mismatch not detected')


def test_error_hierarchy():
    assert issubclass(SizeCap, KnotxtendError)
    assert issubclass(KnotxtendError, ValueError)


def test_assert_verdict():
    assert_verdict(Certificate('demo', 'PASS'), 'PASS', 'RESOLVED-BY-BRANCH')
    try:
        assert_verdict(Certificate('demo', 'FAIL'), 'PASS')
    except AssertionError:
        pass
    else:
        raise AssertionError('wrong verdict not detected')
