"""Exception hierarchy shared by all modules."""


class ZestingError(Exception):
    """Base class for every error raised by :mod:`hopfzest`."""


# scalar
class ZeroToNonpositivePower(ZestingError, ZeroDivisionError):
    pass


class ZeroHasNoRoots(ZestingError, ValueError):
    pass


# group
class ForeignElement(ZestingError, ValueError):
    """An element was used with a group it does not belong to."""


class NotNormal(ZestingError, ValueError):
    pass


class GroupTooLarge(ZestingError, ValueError):
    pass


# cochain
class ArityTooHigh(ZestingError, ValueError):
    pass


class NotNormalized(ZestingError, ValueError):
    pass


class BudgetExceeded(ZestingError, RuntimeError):
    pass


# ydmodule
class NotNormalSupport(ZestingError, ValueError):
    pass


class NotDiagonal(ZestingError, ValueError):
    pass


class NonDiagonalAction(ZestingError, ValueError):
    """The action of a group element on a basis vector is not a known scalar."""


class InvalidParameters(ZestingError, ValueError):
    pass


# zesting / coquasi
class NotInGamma0(ZestingError, ValueError):
    pass


class RootMismatch(ZestingError, ValueError):
    pass


class NotCyclic(ZestingError, ValueError):
    pass


class InvalidDatum(ZestingError, ValueError):
    """Raised when a datum fails verification; carries the failing report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
