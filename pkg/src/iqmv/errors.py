"""Exception hierarchy for the interval-matrix verifier."""


class IqmvError(Exception):
    """Base class for all errors raised by this package."""


class SingularMatrix(IqmvError, ValueError):
    """A pivot fell below the singularity threshold during elimination."""


class NotSymmetric(IqmvError, ValueError):
    pass


class BoundsInverted(IqmvError, ValueError):
    pass


class RankTooHigh(IqmvError, ValueError):
    """The perturbation matrix is not (numerically) rank one."""


class ZeroMatrix(IqmvError, ValueError):
    pass


class DimensionTooLarge(IqmvError, ValueError):
    pass


class NegativeEntries(IqmvError, ValueError):
    """The perturbation matrix has entries below zero."""


class NonPositiveCost(IqmvError, ValueError):
    """The best sampled cost is not positive, so no radius can be reported."""


class ProblemFormatError(IqmvError, ValueError):
    pass
