"""Exception types shared across the toolkit."""

import os


class ArcflipError(Exception):
    """Base class for all toolkit errors."""


class ParseError(ArcflipError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GuardExceeded(ArcflipError):
    """An enumeration bound was hit; `total` holds the count when known."""

    def __init__(self, message, total=None):
        self.total = total
        super().__init__(message)


class PreconditionError(ArcflipError):
    """An operation was called on an input outside its contract.

    `kind` is a short machine-readable tag such as ``"c4-present"`` and
    `witness` carries the offending structure when there is one.
    """

    def __init__(self, kind, message, witness=None):
        self.kind = kind
        self.witness = witness
        super().__init__(message)


def guard(default):
    """Return the enumeration bound, honouring the ARCFLIP_GUARD override."""
    value = os.environ.get("ARCFLIP_GUARD")
    if value:
        try:
            return int(value)
        except ValueError:
            pass
    return default
