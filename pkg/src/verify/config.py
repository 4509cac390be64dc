"""
Suite Configuration Module.

Provides the data structure for configuring a verification sweep: the
enumeration bounds and the number of worker processes.
"""

from dataclasses import dataclass
from typing import Any, Dict


DEFAULT_N_MAX = 6
DEFAULT_C_MAX = 12


@dataclass(frozen=True)
class SuiteConfig:
    """
    Configuration for a verification sweep.

    Attributes:
        n_max: Largest number of simples enumerated.
        c_max: Largest admissible-sequence entry enumerated.
        workers: Worker processes; 1 runs everything in-process.
    """
    n_max: int = DEFAULT_N_MAX
    c_max: int = DEFAULT_C_MAX
    workers: int = 1

    def validate(self) -> bool:
        """
        Validate configuration values.

        Returns:
            True if configuration is valid, False otherwise.
        """
        if self.n_max < 1 or self.c_max < 1:
            return False
        if self.workers < 1:
            return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary (the report's "bounds" block)."""
        return {
            'n_max': self.n_max,
            'c_max': self.c_max,
            'workers': self.workers,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SuiteConfig':
        """
        Deserialize from dictionary.

        Missing keys take their defaults.
        """
        return cls(
            n_max=int(data.get('n_max', DEFAULT_N_MAX)),
            c_max=int(data.get('c_max', DEFAULT_C_MAX)),
            workers=int(data.get('workers', 1)),
        )
