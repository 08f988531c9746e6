# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Argument checks shared by the public functions.
# Author: knotxtend developers
#
# License: BSD 3 clause

from .errors import (UnknownCrossing, SizeCap, MultiComponentUnsupported,
                     DisconnectedDiagram)


def check_crossing(diagram, x):
    if not isinstance(x, int) or x < 0 or x >= diagram.num_crossings:
        raise UnknownCrossing('Crossing %r does not exist in a diagram with'
                              ' %d crossings.' % (x, diagram.num_crossings))


def check_size(diagram, cap, what):
    if cap is not None and diagram.num_crossings > cap:
        raise SizeCap('%s is capped at %d crossings. Got %d.'
                      % (what, cap, diagram.num_crossings))


def check_knot(diagram, what):
    if diagram.num_components != 1:
        raise MultiComponentUnsupported('%s needs a knot diagram. Got %d'
                                        ' components.'
                                        % (what, diagram.num_components))


def check_connected(diagram, what):
    if not diagram.is_connected():
        raise DisconnectedDiagram('%s needs a connected diagram.' % what)
