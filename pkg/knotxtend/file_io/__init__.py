# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
# Author: knotxtend developers
#
# License: BSD 3 clause

from .find_files import find_code_files
from .find_files import code_kind
from .codes import read_codes
from .codes import write_codes
from .codes import format_code
from .json_io import diagram_to_dict
from .json_io import diagram_from_dict
from .json_io import diagram_digest
from .json_io import dump_diagram
from .json_io import load_diagram
from .json_io import load_diagrams
from .json_io import certificate_to_json
from .json_io import certificate_from_json
from .manifest import certificate_manifest
from .manifest import write_manifest
from .manifest import read_manifest
from .manifest import verdict_counts
from .vformat import write_vformat
from .vformat import read_vformat

__all__ = ["find_code_files", "code_kind", "read_codes", "write_codes",
           "format_code", "diagram_to_dict", "diagram_from_dict",
           "diagram_digest", "dump_diagram", "load_diagram",
           "load_diagrams", "certificate_to_json", "certificate_from_json",
           "certificate_manifest", "write_manifest", "read_manifest",
           "verdict_counts", "write_vformat", "read_vformat"]
