# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

__version__ = '0.1.0dev'
