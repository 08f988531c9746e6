# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Exception hierarchy.
# Author: knotxtend developers
#
# License: BSD 3 clause


class KnotxtendError(ValueError):
    """Base class of all errors raised by knotxtend."""


class MalformedCode(KnotxtendError):
    """A DT, Gauss or JSON code is syntactically invalid."""


class NonRealizable(KnotxtendError):
    """A code has no planar realization."""


class UnknownCrossing(KnotxtendError):
    pass


class UnknownIds(KnotxtendError):
    pass


class DisconnectedDiagram(KnotxtendError):
    pass


class SplitDiagram(KnotxtendError):
    pass


class MultiComponentUnsupported(KnotxtendError):
    pass


class DimensionMismatch(KnotxtendError):
    pass


class ZeroOnSingleton(KnotxtendError):
    pass


class NonBipartite(KnotxtendError):
    pass


class NotSpecial(KnotxtendError):
    pass


class NotSimple(KnotxtendError):
    pass


class NotACut(KnotxtendError):
    pass


class PatternMismatch(KnotxtendError):
    pass


class SizeCap(KnotxtendError):
    """A computation was refused because the input exceeds its cap."""


class NotGenerating(KnotxtendError):
    pass


class MissingUnitPolynomial(KnotxtendError):
    pass


class InconsistentSeed(KnotxtendError):
    pass


class PrerequisiteFails(KnotxtendError):
    pass
