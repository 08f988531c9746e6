# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from .classes import EquivClasses
from .classes import equivalence_classes
from .classes import linking_matrix
from .classes import is_generating
from .twists import t2_twist
from .twists import TwistVector
from .twists import realize_series
from .twists import x_star
from .flypes import Flype
from .flypes import flypes_at
from .flypes import flyping_degree
from .flypes import x_plus
from .bounds import generator_bounds_check
from .bounds import generator_crossing_bound
from .bounds import class_bound

__all__ = ["EquivClasses", "equivalence_classes", "linking_matrix",
           "is_generating", "t2_twist", "TwistVector", "realize_series",
           "x_star", "Flype", "flypes_at", "flyping_degree", "x_plus",
           "generator_bounds_check", "generator_crossing_bound",
           "class_bound"]
