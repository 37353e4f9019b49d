"""Exception types shared across the package."""


class QuftiError(Exception):
    """Base class for all errors raised by this package."""


class SizeLimitError(QuftiError, ValueError):
    """Matrix dimension exceeds the hard limit of the requested algorithm."""


class SmallPhaseValidityError(QuftiError, ValueError):
    """A small-phase closed form was evaluated outside its range of validity."""


class DegenerateWeightsError(QuftiError, ValueError):
    """All phase weights are equal: the probability carries no phase information."""


class ProbabilityBoundsError(QuftiError, ArithmeticError):
    """A probability left [0, 1] by more than rounding can explain."""
