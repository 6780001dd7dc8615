"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: ValidationError -> 1,
PropertyViolation -> 2, SizeCapExceeded -> 3.
"""


class LefschetzError(Exception):
    pass


class ValidationError(LefschetzError):
    """Malformed or mathematically inadmissible input."""


class ParseError(ValidationError):
    """Syntax error in polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PropertyViolation(LefschetzError):
    """A cross-checked identity failed (e.g. the two Hilbert routes disagree)."""


class SizeCapExceeded(LefschetzError):
    """A minor enumeration would exceed the configured size cap."""
