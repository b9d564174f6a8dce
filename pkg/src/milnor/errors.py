"""Exception types.  Each carries the CLI exit code it maps to."""


class MilnorError(Exception):
    exit_code = 1


class InputError(MilnorError, ValueError):
    """Malformed polynomial, variable list or catalog."""

    exit_code = 2

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NonIsolatedSingularitiesError(MilnorError):
    exit_code = 3


class LimitExceededError(MilnorError):
    """A retry budget or degree cap was exhausted."""

    exit_code = 4
