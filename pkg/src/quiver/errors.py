"""
Errors raised by resolution quiver computations.
"""


class NotACycle(ValueError):
    """Raised when a vertex list is not a directed cycle of the quiver."""
    pass


class WeightMismatch(ArithmeticError):
    """Raised when the two weight formulas for a cycle disagree."""
    pass
