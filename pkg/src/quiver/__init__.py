"""
Resolution quivers of connected Nakayama algebras.
"""

from .dot_export import to_dot
from .errors import NotACycle, WeightMismatch
from .resolution_quiver import (
    ComponentDecomposition,
    Cycle,
    ResolutionQuiver,
    cycle_weight,
    decompose,
    f_map,
    gamma_consistency,
)

__all__ = [
    'ComponentDecomposition',
    'Cycle',
    'ResolutionQuiver',
    'cycle_weight',
    'decompose',
    'f_map',
    'gamma_consistency',
    'to_dot',
    'NotACycle',
    'WeightMismatch',
]
