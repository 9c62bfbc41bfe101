"""
Errors
Exception hierarchy shared by the abflux engine and CLI
"""

from typing import Any, Optional


class AbfluxError(Exception):
    """Base class for all abflux errors"""


class DomainError(AbfluxError, ValueError):
    """Argument outside the domain of an operation"""


class DegeneracyError(AbfluxError, ArithmeticError):
    """Interference denominator vanished for a channel"""

    def __init__(self, message: str, order: Optional[float] = None):
        super().__init__(message)
        self.order = order


class ConvergenceError(AbfluxError):
    """
    Channel sum hit its truncation caps before meeting the tolerance.

    The partial result is kept on the exception so callers can still
    report it.
    """

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial


class PresetError(AbfluxError, KeyError):
    """Unknown figure preset"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown preset"
