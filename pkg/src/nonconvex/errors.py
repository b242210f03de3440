"""Exception types.

Errors that carry a refutation of the hypothesis "no three points of X are
pairwise invisible" subclass :class:`AlphaRefuted`; the CLI maps them to exit
code 3.
"""


class NonconvexError(Exception):
    """Base class for all library errors."""


class InvalidInput(NonconvexError, ValueError):
    pass


class FeatureOutsideS(InvalidInput):
    pass


class HoleCreated(InvalidInput):
    pass


class UnknownName(InvalidInput, KeyError):
    pass


class SizeLimit(NonconvexError):
    pass


class PreconditionViolated(NonconvexError):
    pass


class PreconditionUnverified(PreconditionViolated):
    pass


class NotAntennaPoint(PreconditionViolated):
    pass


class MissingInteriorFeature(PreconditionViolated):
    pass


class OriginNotInKernel(PreconditionViolated):
    pass


class RayDegenerate(PreconditionViolated):
    pass


class UnsupportedInput(NonconvexError):
    pass


class NotConvexStar(NonconvexError):
    pass


class NonConvexUnion(NonconvexError):
    pass


class ColoringConflict(NonconvexError):
    def __init__(self, message, pieces=()):
        super().__init__(message)
        self.pieces = tuple(pieces)


class AlphaRefuted(NonconvexError):
    """Evidence that X contains three pairwise invisible points (or a
    structural consequence of that)."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class CommonSeerFound(PreconditionViolated):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonConvexLeaf(AlphaRefuted):
    pass


class LemmaViolation(AlphaRefuted):
    pass


class InvisibilityTriple(AlphaRefuted):
    pass


class RayPropertyViolated(AlphaRefuted):
    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point
