# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from .series import SeriesDecomposition
from .series import series_decomposition
from .series import reduce_term
from .hoste import positive_zero_test
from .hoste import rouche_test
from .hoste import hoste_numeric_check
from .hoste import sign_at_root
from .hoste import line_parts
from .coefficients import logconcavity_test
from .coefficients import trapezoidal_test
from .coefficients import os_inequalities
from .coefficients import ratio_bounds
from .coefficients import binomial_ratio_check
from .logconcave import series_logconcavity_certify
from .logconcave import reduce_candidates
from .logconcave import hull_in_region
from .sharpness import mwf_sharpness_test
from .sharpness import seifert_class_sets
from .polytope import PolytopeData
from .polytope import polytope_export
from .batch import TESTS
from .batch import run_test
from .batch import certify

__all__ = ["SeriesDecomposition", "series_decomposition", "reduce_term",
           "positive_zero_test", "rouche_test", "hoste_numeric_check",
           "sign_at_root", "line_parts",
           "logconcavity_test", "trapezoidal_test", "os_inequalities",
           "ratio_bounds", "binomial_ratio_check",
           "series_logconcavity_certify", "reduce_candidates",
           "hull_in_region", "mwf_sharpness_test", "seifert_class_sets",
           "PolytopeData", "polytope_export", "TESTS", "run_test",
           "certify"]
