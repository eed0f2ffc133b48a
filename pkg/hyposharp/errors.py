"""Exception hierarchy shared by every hyposharp module."""

from typing import Optional


class HyposharpError(Exception):
    """Base class for all errors raised by hyposharp."""


class ParseError(HyposharpError, ValueError):
    """Raised when a word, term, identity or ranked word cannot be parsed."""

    def __init__(self, text: str, position: int, reason: str = "unexpected input"):
        self.text = text
        self.position = max(0, min(position, len(text)))
        self.reason = reason
        super().__init__(self._render())

    def _render(self) -> str:
        caret = " " * self.position + "^"
        return f"{self.reason} at column {self.position + 1}\n  {self.text}\n  {caret}"


class RankError(HyposharpError, ValueError):
    """A letter, rank or index lies outside the admissible range."""


class UndefinedSymbolError(HyposharpError, KeyError):
    """A symbol or occurrence was queried on a word that does not contain it."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep messages readable
        return str(self.args[0]) if self.args else ""


class UnbalancedIdentityError(HyposharpError, ValueError):
    """An operation defined on balanced identities received an unbalanced one."""


class InvolutionError(HyposharpError, ValueError):
    """A plain (involution-free) procedure received starred symbols."""


class OracleError(HyposharpError, ValueError):
    """The exhaustive oracle or a finite model cannot serve the request."""


class DimensionError(HyposharpError, ValueError):
    """Matrix shapes or semirings do not match."""


def describe(error: Exception, command: Optional[str] = None) -> str:
    """Render an error for the command line."""
    prefix = f"{command}: " if command else ""
    return f"{prefix}{error}"
