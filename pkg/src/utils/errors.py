"""
Error Taxonomy Module
Lagroot - Certified Polynomial Root Finding

Exception classes raised by the library. Each class carries the exit code the
command-line front end reports for it.
"""

from typing import Any, Dict


class LagrootError(Exception):
    """Base class for all library errors."""

    exit_code = 4
    kind = "internal"

    def to_dict(self) -> Dict[str, Any]:
        """Machine-readable error payload."""
        return {"error": self.kind, "type": type(self).__name__, "message": str(self)}


class ParseError(LagrootError, ValueError):
    """Malformed rational, Gaussian, dyadic or polynomial text."""

    exit_code = 2
    kind = "parse"


class PreconditionError(LagrootError, ValueError):
    """An operation was called outside its documented domain."""

    exit_code = 3
    kind = "precondition"


class ArithmeticDomainError(PreconditionError, ZeroDivisionError):
    """Division by zero or square root of a negative rational."""


class ConstantPolynomialError(PreconditionError):
    """A nonconstant polynomial was required."""


class NotSquareFreeError(PreconditionError):
    """A square-free polynomial was required (gcd(f, f') != 1)."""


class CriticalCenterError(PreconditionError):
    """Series center is a critical point: f'(a) = 0."""


class NonRealRootError(PreconditionError):
    """The selected root is not real."""


class RootSelectionError(PreconditionError):
    """Root or factor index out of range."""


class PrecisionCapError(PreconditionError):
    """Requested precision exceeds the configured cap."""


class InvariantViolation(LagrootError):
    """An internal guarantee failed; indicates a bug, never bad input."""

    exit_code = 4
    kind = "invariant"


class OracleConvergenceError(LagrootError):
    """Reference iteration did not certify within its budget."""

    kind = "oracle"
