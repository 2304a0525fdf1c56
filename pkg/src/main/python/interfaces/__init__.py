"""Interfaces package init."""

from .errors import (
    ModularDominationError,
    GraphUsageError,
    Graph6ParseError,
    FamilySpecError,
    SizeLimitError,
    VerificationError,
)

__all__ = [
    'ModularDominationError',
    'GraphUsageError',
    'Graph6ParseError',
    'FamilySpecError',
    'SizeLimitError',
    'VerificationError',
]
