"""Exception and warning types shared across the toolkit."""


class NotPrime(ValueError):
    pass


class NoRoot(ValueError):
    pass


class RingMismatch(ValueError):
    pass


class PolySyntaxError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class UnknownVariable(PolySyntaxError):
    pass


class DegreeMismatch(ValueError):
    pass


class RankDeficient(ValueError):
    pass


class ZeroDivisorJ(ValueError):
    pass


class NotContained(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class NoConvergence(RuntimeError):
    pass


class SliceDegenerate(RuntimeError):
    pass


class ResourceExceeded(RuntimeError):
    pass


class RetryExhausted(RuntimeError):
    pass


class PositiveDimensionalStratum(ValueError):
    pass


class InvarianceCheckFailed(AssertionError):
    pass


class CeilingTooLow(UserWarning):
    """New generators may still appear beyond the supplied degree ceiling."""


class DegenerateParameter(UserWarning):
    """Pencil parameters giving a reducible scroll; results still computed."""
