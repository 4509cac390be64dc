"""
Command-line interface package.

Exports the parser factory and the entry point used by main.py.
"""

from .commands import (
    EXIT_INVALID_INPUT,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    main,
    setup_main_parser,
)

__all__ = [
    'EXIT_INVALID_INPUT',
    'EXIT_OK',
    'EXIT_VERIFICATION_FAILED',
    'main',
    'setup_main_parser',
]
