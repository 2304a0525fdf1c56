"""Exception hierarchy for the modular product domination toolkit."""
from typing import Optional


class ModularDominationError(Exception):
    """Base class for every error raised by the toolkit."""


class GraphUsageError(ModularDominationError, ValueError):
    """A caller broke an operation's precondition."""


class FamilySpecError(ModularDominationError, ValueError):
    """A family specification is unknown or has invalid parameters.

    Attributes:
        spec: The offending specification text
        message: Error message
    """

    def __init__(self, spec: str, message: str):
        self.spec = spec
        self.message = message
        super().__init__(f"[{spec}] {message}")


class Graph6ParseError(ModularDominationError, ValueError):
    """A graph6 string could not be decoded.

    Attributes:
        text: The input that failed
        offset: Byte offset of the first bad byte
        message: Error message
    """

    def __init__(self, text: str, offset: int, message: str):
        self.text = text
        self.offset = offset
        self.message = message
        super().__init__(f"graph6 error at byte {offset}: {message}")


class SizeLimitError(ModularDominationError):
    """An input exceeds one of the hard size guards."""

    def __init__(self, what: str, limit: int, actual: int):
        self.what = what
        self.limit = limit
        self.actual = actual
        super().__init__(f"{what} is {actual}, limit is {limit}")


class VerificationError(ModularDominationError, AssertionError):
    """A constructed witness failed its verifier.

    Attributes:
        rule: Rule or clause that produced the witness
        details: Optional reproduction data
    """

    def __init__(self, rule: str, message: str, details: Optional[dict] = None):
        self.rule = rule
        self.details = details or {}
        super().__init__(f"[{rule}] {message}")
