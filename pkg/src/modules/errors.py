"""
Errors raised by the uniserial module calculus.
"""


class ZeroModule(ValueError):
    """Raised when an operation needs a nonzero module."""
    pass


class ProjectiveModule(ValueError):
    """Raised when tau is applied to a projective module."""
    pass


class InjectiveModule(ValueError):
    """Raised when tau inverse is applied to an injective module."""
    pass
