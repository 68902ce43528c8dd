"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: domain/validation problems exit 1,
numerical/internal failures exit 2, broken cross-module identities exit 3.
"""


class CoxlinksError(Exception):
    """Base class for all library errors."""


class DomainError(CoxlinksError, ValueError):
    """Input violates a documented precondition."""


class ParseError(DomainError):
    """Malformed textual input; carries the character position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnsupportedError(DomainError):
    """Operation not defined for this input (e.g. exact charpoly of a
    non-simply-laced graph); the message names the alternative."""


class PositivityError(DomainError):
    """Ordered chord system is not positive; carries the offending pair."""

    def __init__(self, pair):
        i, j = pair
        super().__init__(
            f"system is not positive: chord at position {i} crosses the chord "
            f"at position {j} negatively (positions are 1-based, {i} > {j})"
        )
        self.pair = pair


class ConvergenceError(CoxlinksError, RuntimeError):
    """Numerical refinement failed to certify the requested radius."""

    def __init__(self, message, achieved=None):
        if achieved is not None:
            message = f"{message} (achieved radius {achieved:.3e})"
        super().__init__(message)
        self.achieved = achieved


class AmbiguityError(ConvergenceError):
    """A root modulus sits in the unresolvable band around the unit circle,
    or an eigenvalue sits too close to zero to classify."""


class InconclusiveError(ConvergenceError):
    """A bounded search ran out of budget before covering its space."""


class InvariantViolationError(CoxlinksError):
    """A mathematical identity that must hold was found broken."""
