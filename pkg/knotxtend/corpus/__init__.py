# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from .corpus import Corpus
from .corpus import CorpusEntry
from .corpus import knot_key
from .enumerate import Enumerator
from .enumerate import alternating_codes
from .enumerate import code_images
from .enumerate import is_canonical
from .enumerate import is_prime_reduced

__all__ = ["Corpus", "CorpusEntry", "knot_key", "Enumerator",
           "alternating_codes", "code_images", "is_canonical",
           "is_prime_reduced"]
