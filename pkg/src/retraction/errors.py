"""
Errors raised by normalization and left retraction.
"""


class NotNormalized(ValueError):
    """Raised when a sequence is not in normalized form p(A) = c_1 = c_n - 1."""
    pass


class AlreadySelfInjective(ValueError):
    """Raised when a self-injective sequence is normalized or retracted."""
    pass


class InternalInvariantViolated(AssertionError):
    """Raised when a proved property fails during a computation; always a bug."""
    pass
