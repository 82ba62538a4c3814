# errors.py

from dataclasses import dataclass, field


class NeronError(Exception):
    """Base class of every error raised by neronpy."""

    exit_code = 1


class InputValidationError(NeronError, ValueError):
    """
    Raised when an input violates a structural requirement.

    Examples are a list of primes with an even number of entries, a Brandt
    matrix whose rows do not sum to N, or a disconnected graph handed to an
    operation that needs connectivity.
    """

    exit_code = 1


class GraphValidationError(InputValidationError):
    """Raised when a weighted graph or an involution is malformed."""


class ArithmeticInconsistency(NeronError, ArithmeticError):
    """
    Raised when exact arithmetic produces a value that genuine data cannot.

    A characteristic polynomial that does not vanish at N, a non-integral
    order or class number, and two routes of a cross-check that disagree all
    end up here.
    """

    exit_code = 2


class ParseError(NeronError, ValueError):
    """
    Raised when an input file or a command line cannot be read.

    Parameters
    ----------
    message : str
        What went wrong.
    line : int, optional
        1-based line number of the offending record.
    """

    exit_code = 3

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    severity: str = "error"

    def __str__(self):
        return f"{self.severity}: {self.kind}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of a validator that never raises.

    The report is empty when the input is well-formed. Warnings do not make
    the input invalid.
    """

    violations: tuple = field(default_factory=tuple)

    @property
    def errors(self):
        return tuple(v for v in self.violations if v.severity == "error")

    @property
    def warnings(self):
        return tuple(v for v in self.violations if v.severity == "warning")

    @property
    def ok(self):
        return not self.errors

    def kinds(self):
        return {v.kind for v in self.violations}

    def __bool__(self):
        # truthy when something was reported
        return bool(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def __len__(self):
        return len(self.violations)

    def raise_for_errors(self, exc_type=InputValidationError):
        if self.errors:
            raise exc_type("; ".join(str(v) for v in self.errors))
        return self
