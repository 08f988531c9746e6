# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from ._routing import reroute
from .trace import MoveTrace
from .trace import apply_move
from .bridges import Bridge
from .bridges import find_bridges
from .bridges import max_bridge_length
from .wave import WaveMove
from .wave import reducing_wave_move
from .wave import wave_moves
from .wave import rational_tangle_move
from .wave import rational_sites
from .reidemeister import Move
from .reidemeister import reidemeister_moves
from .reidemeister import r1_minus
from .reidemeister import r2_minus
from .reidemeister import r3_moves
from .reidemeister import r1_plus
from .reidemeister import r2_plus
from .reidemeister import random_unknot
from .slides import factor_slide
from .slides import factor_cuts
from .hirasawa import hirasawa_specialize
from .hirasawa import hirasawa_step
from .mp import mp_move
from .mp import expected_graph
from .braid import BraidWord
from .braid import vogel_braid
from .braid import vogel_moves
from .braid import read_braid
from .simplify import SimplifyPolicy
from .simplify import simplify

__all__ = ["reroute", "MoveTrace", "apply_move", "Bridge", "find_bridges",
           "max_bridge_length", "WaveMove", "reducing_wave_move",
           "wave_moves", "rational_tangle_move", "rational_sites", "Move",
           "reidemeister_moves", "r1_minus", "r2_minus", "r3_moves",
           "r1_plus", "r2_plus", "random_unknot", "factor_slide",
           "factor_cuts", "hirasawa_specialize", "hirasawa_step",
           "mp_move", "expected_graph", "BraidWord", "vogel_braid",
           "vogel_moves", "read_braid", "SimplifyPolicy", "simplify"]
