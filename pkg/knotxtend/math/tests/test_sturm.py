# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction
from knotxtend.math import (sturm_sequence, sign_changes, count_real_roots,
                            is_positive_on_line)


def test_sturm_sequence_length():
    seq = sturm_sequence([1, 0, -2])
    assert len(seq) == 3
    assert seq[-1].degree() == 0


def test_sign_changes():
    assert sign_changes([1, 0, -1, -2, 3]) == 2
    assert sign_changes([0, 0]) == 0


def test_count_real_roots():
    assert count_real_roots([1, 0, -2]) == 2
    assert count_real_roots([1, 0, -2], 0, 2) == 1
    assert count_real_roots([1, 0, 1]) == 0
    # (x - 1)^2 has one distinct root
    assert count_real_roots([1, -2, 1]) == 1
    assert count_real_roots([1, -3, 1], Fraction(2), Fraction(3)) == 1


def test_is_positive_on_line():
    ok, witness = is_positive_on_line([1, 0, 1])
    assert ok
    assert witness['degree'] == 2
    ok, _ = is_positive_on_line([1, -3, 1])
    assert not ok
    ok, _ = is_positive_on_line([-1, 0, -1])
    assert not ok
    ok, _ = is_positive_on_line([5])
    assert ok
