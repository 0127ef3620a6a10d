"""Exception hierarchy.

Every error raised on bad input derives from ``ThetaError`` so the CLI can
map it to exit status 1 with a single ``except``.
"""


class ThetaError(ValueError):
    """Base class for invalid-input errors."""


# dimension sequences, up-and-down vectors, trees, graded sets
class EmptySequence(ThetaError):
    pass


class EndpointNotZero(ThetaError):
    pass


class StepNotOne(ThetaError):
    pass


class InvalidUpDown(ThetaError):
    pass


class ZeroDimensional(ThetaError):
    pass


# complexes and chain morphisms
class InvalidStructure(ThetaError):
    pass


class SourceTargetMismatch(ThetaError):
    pass


class ShapeMismatch(ThetaError):
    pass


class NegativeEntry(ThetaError):
    pass


class NotChainMap(ThetaError):
    pass


class NotAugmented(ThetaError):
    pass


# simple complexes
class MixedDegrees(ThetaError):
    pass


class NotComparable(ThetaError):
    pass


class NotSeparated(ThetaError):
    pass


class Condition1Violated(ThetaError):
    pass


class Condition2Violated(ThetaError):
    pass


# cells
class BadAugmentation(ThetaError):
    pass


class BoundaryMismatch(ThetaError):
    pass


class InfiniteSupport(ThetaError):
    pass


class NotPositive(ThetaError):
    pass


class NotComposable(ThetaError):
    pass


class NotUnital(ThetaError):
    pass


# cochain side
class NotCochainMap(ThetaError):
    pass


class NotCoaugmented(ThetaError):
    pass


# wreath products
class ComponentOutsidePhi(ThetaError):
    pass


class ParseError(ThetaError):
    pass
