# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from .bracket import kauffman_bracket
from .bracket import jones
from .skein import SkeinTree
from .skein import skein_polynomial
from .skein import is_descending
from .skein import mwf
from .skein import morton_check
from .alexander import alexander
from .alexander import conway
from .alexander import determinant
from .alexander import v2
from .signature import signature
from .signature import goeritz
from .astate import AStateReport
from .astate import a_state_analysis
from .checks import regularization_check
from .checks import slice_genus_bounds
from .checks import bennequin_checks
from .checks import positive_crossing_check
from .bundle import invariant_bundle

__all__ = ["kauffman_bracket", "jones", "SkeinTree", "skein_polynomial",
           "is_descending", "mwf", "morton_check", "alexander", "conway",
           "determinant", "v2", "signature", "goeritz", "AStateReport",
           "a_state_analysis", "regularization_check", "slice_genus_bounds",
           "bennequin_checks", "positive_crossing_check",
           "invariant_bundle"]
