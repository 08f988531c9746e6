# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from .laurent import LaurentPoly
from .bivariate import BiPoly, conway_to_alexander, conway_at_2i
from .sturm import (sturm_sequence, sign_changes, count_real_roots,
                    is_positive_on_line)
from .hull import convex_hull, hull_edges, facet_inequalities
from .linalg import (integer_det, det_mod2, symmetric_inertia,
                     symmetric_signature, polynomial_det)

__all__ = ["LaurentPoly", "BiPoly", "conway_to_alexander", "conway_at_2i",
           "sturm_sequence", "sign_changes", "count_real_roots",
           "is_positive_on_line", "convex_hull", "hull_edges",
           "facet_inequalities", "integer_det", "det_mod2",
           "symmetric_inertia", "symmetric_signature", "polynomial_det"]
