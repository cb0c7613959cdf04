"""Exception types shared across the package."""


class CsdepthError(Exception):
    """Base class for all package-specific errors."""


class InputError(CsdepthError):
    """Invalid argument, malformed input, or violated precondition."""


class ParseError(InputError):
    """Malformed configuration or pairs document."""


class ViolationError(CsdepthError):
    """A mathematical invariant that must hold was observed to fail.

    This is never raised for bad input: it signals either an implementation
    bug or a genuine counterexample, and carries the offending object so it
    can be dumped and inspected.
    """

    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
