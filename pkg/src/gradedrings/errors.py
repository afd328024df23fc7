"""Exception hierarchy shared by every module."""


class GradedRingError(Exception):
    """Base class for all library errors."""


class RingMismatch(GradedRingError):
    pass


class MonoidMismatch(GradedRingError):
    pass


class MorphismMismatch(GradedRingError):
    pass


class InvalidElement(GradedRingError, ValueError):
    pass


class NotAUnit(GradedRingError, ArithmeticError):
    pass


class Unsupported(GradedRingError):
    pass


class EmptyInput(GradedRingError, ValueError):
    pass


class NotIdempotentModuloNilradical(GradedRingError, ValueError):
    pass


class ZeroElement(GradedRingError, ValueError):
    pass


class BudgetExceeded(GradedRingError):
    pass


class MembershipUnknown(BudgetExceeded):
    """A bounded membership search ran out of budget without a verdict."""


class HypothesisViolation(GradedRingError):
    """An operation was called outside the hypotheses it is valid under.

    ``reason`` is a short machine-readable tag such as ``"NotTorsionFree"``.
    """

    reason = "Other"

    def __init__(self, message="", reason=None):
        super().__init__(message)
        if reason is not None:
            self.reason = reason


class NotTorsionFree(HypothesisViolation):
    reason = "NotTorsionFree"


class NotAnAnnihilator(GradedRingError, ValueError):
    pass


class WindowTooSmall(GradedRingError):
    pass
