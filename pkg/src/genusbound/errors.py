"""Exception hierarchy shared by all modules."""


class GenusBoundError(Exception):
    """Base class for every error raised by this package."""


class InputError(GenusBoundError, ValueError):
    """Malformed or dimensionally inconsistent input."""


class PreconditionError(GenusBoundError, ValueError):
    """Input is well formed but violates an operation's precondition."""


class HypothesisError(GenusBoundError, ValueError):
    """A required topological hypothesis flag is not set."""


class CorruptTraceError(GenusBoundError, ValueError):
    """A reduction trace cannot be replayed or does not reproduce its basis."""


class InvariantViolation(GenusBoundError, AssertionError):
    """An internal result failed a self-check. Always a bug, never user input."""


class ValidationError(InputError):
    """Input violating a named consistency rule such as ``wu_parity``."""

    def __init__(self, rule: str, message: str, path: str = ""):
        super().__init__(f"{rule}: {message}")
        self.rule = rule
        self.message = message
        self.path = path
