# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from .knots import knot_table
from .knots import knot
from .knots import trefoil
from .knots import figure_eight
from .knots import torus_2
from .knots import kink
from .knots import kinked_trefoil
from .knots import trefoil_sum

__all__ = ["knot_table", "knot", "trefoil", "figure_eight", "torus_2",
           "kink", "kinked_trefoil", "trefoil_sum"]
