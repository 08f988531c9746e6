# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from .marked import MarkedGraph
from .marked import from_edge_list
from .seifert_graph import SeifertGraph
from .seifert_graph import build_graph
from .index import IndexMemo
from .index import ind
from .index import ind0
from .index import ind_b
from .index import core_set
from .bounds import IndexReport
from .bounds import mp_bounds
from .bounds import psim_check
from .bounds import ci_check

__all__ = ["MarkedGraph", "from_edge_list", "SeifertGraph", "build_graph",
           "IndexMemo", "ind", "ind0", "ind_b", "core_set",
           "IndexReport", "mp_bounds", "psim_check", "ci_check"]
