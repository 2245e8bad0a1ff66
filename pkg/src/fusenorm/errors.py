"""Exception types shared across the package.

The CLI maps these onto exit codes: usage errors -> 1, DataFormatError -> 2,
ScorerError (with fallback disabled) -> 3.
"""


class FusenormError(Exception):
    """Base class for errors raised by this package."""


class CyclicMachineError(FusenormError):
    """Path enumeration was asked to run on a transducer with a cycle."""


class NoPathError(FusenormError):
    """The transducer has no accepting path."""


class DataFormatError(FusenormError):
    """A data file (dataset, grammar table, model file) is malformed."""

    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc += str(path)
        if line is not None:
            loc += f":{line}"
        super().__init__(f"{loc}: {message}" if loc else message)
        self.path = path
        self.line = line


class ScorerError(FusenormError):
    """A scorer failed (transport failure, bad response, bad input).

    ``batch`` carries the requests that could not be scored, so callers can
    fall back or retry.
    """

    def __init__(self, message, batch=None):
        super().__init__(message)
        self.batch = batch if batch is not None else []
