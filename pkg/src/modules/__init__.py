"""
Uniserial modules over Nakayama algebras and their homological dimensions.
"""

from .errors import InjectiveModule, ProjectiveModule, ZeroModule
from .homological_dimension import (
    INFINITE,
    HomDim,
    global_dim,
    inj_dim,
    proj_dim,
    simple_inj_dims,
    simple_proj_dims,
)
from .uniserial import (
    ZERO,
    UniserialModule,
    cosyzygy,
    gamma,
    injective_envelope,
    is_injective,
    is_projective,
    module,
    proj_cover,
    simple,
    socle,
    syzygy,
    tau,
    tau_inv,
)

__all__ = [
    'InjectiveModule',
    'ProjectiveModule',
    'ZeroModule',
    'INFINITE',
    'HomDim',
    'global_dim',
    'inj_dim',
    'proj_dim',
    'simple_inj_dims',
    'simple_proj_dims',
    'ZERO',
    'UniserialModule',
    'cosyzygy',
    'gamma',
    'injective_envelope',
    'is_injective',
    'is_projective',
    'module',
    'proj_cover',
    'simple',
    'socle',
    'syzygy',
    'tau',
    'tau_inv',
]
