# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from ._diagram import Diagram
from ._diagram import unknot
from ._diagram import relabel
from .codes import parse_dt
from .codes import parse_gauss
from .codes import to_dt
from .codes import to_gauss
from .codes import canonical_dt
from .codes import format_dt
from .seifert import SeifertState
from .seifert import seifert_state
from .seifert import basic_stats
from .regions import RegionMap
from .regions import regions
from .surgery import smooth_crossing
from .surgery import switch_crossing
from .surgery import switch_crossings
from .surgery import mirror
from .surgery import reverse
from .surgery import reflect
from .surgery import flip
from .surgery import remove_crossings
from .surgery import reduce_nugatory
from .surgery import nugatory_crossings
from .surgery import connected_sum
from .surgery import connected_sum_split
from .canonical import canonical_code
from .canonical import same_diagram

__all__ = ["Diagram", "unknot", "relabel", "parse_dt", "parse_gauss",
           "to_dt", "to_gauss", "canonical_dt", "format_dt",
           "SeifertState", "seifert_state", "basic_stats",
           "RegionMap", "regions",
           "smooth_crossing", "switch_crossing", "switch_crossings",
           "mirror", "reverse", "reflect", "flip", "remove_crossings",
           "reduce_nugatory", "nugatory_crossings",
           "connected_sum", "connected_sum_split",
           "canonical_code", "same_diagram"]
