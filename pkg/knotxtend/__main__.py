# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

import sys

from .cli import main

sys.exit(main())
