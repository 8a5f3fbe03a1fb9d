"""Exception types shared across the package."""


class OttoError(Exception):
    """Base class for every error raised by this package."""


class DomainError(OttoError, ValueError):
    """An argument lies outside the physical domain of a formula."""


class ModeError(OttoError, ValueError):
    """The cycle is not operating in the mode the caller asked about."""

    def __init__(self, message, mode=None):
        super().__init__(message)
        self.mode = mode


class SingularityError(OttoError, ArithmeticError):
    """A closed-form expression was evaluated exactly at a pole."""


class InfeasibleError(OttoError, ValueError):
    """The requested operating regime is outside its feasibility window."""


class NoSolutionError(OttoError, ValueError):
    """An inversion has no real solution for the given inputs."""


class BracketError(OttoError, ValueError):
    """A root bracket does not contain a sign change."""
