# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from .counter import Counter
from .testing import assert_raises, assert_verdict
from .checking import (check_crossing, check_size, check_knot,
                       check_connected)
from . import errors

__all__ = ["Counter", "assert_raises", "assert_verdict", "check_crossing",
           "check_size", "check_knot", "check_connected", "errors"]
