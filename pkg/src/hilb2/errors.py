"""Exception types raised across the package."""


class Hilb2Error(Exception):
    """Base class for all errors raised by hilb2."""


class InfiniteColength(Hilb2Error):
    """The operation needs a monomial ideal of finite colength."""


class Unsupported(Hilb2Error):
    """The grading does not satisfy the hypotheses the computation relies on."""


class NotPositiveSignificant(Hilb2Error):
    """An arrow passed where a positive significant arrow is required."""


class HilbertFunctionMismatch(Hilb2Error):
    """Two monomial ideals compared under the poset order have different Hilbert functions."""


class NotAHilbertFunction(Hilb2Error):
    """No monomial ideal realises the requested Hilbert function."""


class InexactDivision(Hilb2Error):
    """A polynomial division that must be exact left a remainder."""


class PreconditionViolated(Hilb2Error):
    """Arguments fall outside the range where the operation is defined."""


class VerificationFailed(Hilb2Error):
    """Two independent computations that must agree did not."""
