"""Exception types shared across the package."""


class LazyCopsError(Exception):
    """Base class for package errors."""


class GraphFormatError(LazyCopsError, ValueError):
    """Malformed edge-list text or invalid graph construction input."""


class CapExceededError(LazyCopsError, RuntimeError):
    """A configured size/state cap would be exceeded."""


class IllegalMoveError(LazyCopsError, RuntimeError):
    """A strategy produced a move that is not legal in the current state."""


class StrategyError(LazyCopsError, RuntimeError):
    """Strategy misconfiguration, e.g. a cop budget below the requirement."""


class UsageError(LazyCopsError, ValueError):
    """Bad arguments at the API or CLI surface."""
