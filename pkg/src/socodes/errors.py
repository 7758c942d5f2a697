"""Exception hierarchy shared by every module."""


class SOCodeError(ValueError):
    """Base class for all library errors."""


class NonPrime(SOCodeError):
    pass


class EvenCharacteristic(SOCodeError):
    pass


class NonDivisor(SOCodeError):
    pass


class IncompatibleLevels(SOCodeError):
    """Neither s1 | s2 nor s2 | s1."""


class NotInSubfield(SOCodeError):
    pass


class ZeroLeadingCoefficient(SOCodeError):
    pass


class NonIntegral(SOCodeError):
    """A Gauss-sum product or table entry does not evaluate to an integer."""


class NonIntegralEntry(NonIntegral):
    pass


class DegenerateParameters(SOCodeError):
    """Closed-form table evaluates to an impossible distribution (weights outside [0, n])."""


class QuotientNotOdd(SOCodeError):
    pass


class ZeroMu(SOCodeError):
    pass


class RankDeficient(SOCodeError):
    pass


class BudgetExceeded(SOCodeError):
    pass


class ZeroCode(SOCodeError):
    pass


class Inconsistent(SOCodeError):
    pass


class NotSelfOrthogonal(SOCodeError):
    pass


class DimensionGapTooSmall(SOCodeError):
    pass


class ConditionsNotMet(SOCodeError):
    pass


class WrongShape(SOCodeError):
    pass


class OracleMismatch(AssertionError):
    """Two independent computations of the same quantity disagree."""
