# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import sys
from io import StringIO
from knotxtend.utils import Counter


def test_counter():
    cnt = Counter()
    for i in range(20):
        cnt.update()
    assert cnt.curr_iter == 20


def test_counter_total():
    old = sys.stderr
    sys.stderr = buf = StringIO()
    try:
        cnt = Counter(name='scan', total=4)
        cnt.update(2)
    finally:
        sys.stderr = old
    assert 'scan: 2/4' in buf.getvalue()
