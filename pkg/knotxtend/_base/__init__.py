# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from ._base_config import _BaseConfig
from ._certificate import (Certificate, checks_certificate, PASS, FAIL,
                           RESOLVED, INAPPLICABLE)

__all__ = ["_BaseConfig", "Certificate", "checks_certificate",
           "PASS", "FAIL", "RESOLVED", "INAPPLICABLE"]
