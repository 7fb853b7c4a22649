"""Error hierarchy shared by every module.

Two failure modes are kept apart on purpose.  DomainError means the caller
handed us something outside an operation's domain; it maps to exit code 1 in
the command-line tool.  ConsistencyError means the library itself derived
something that contradicts a structural guarantee (a uniqueness claim, a
nonnegativity claim, a bijectivity claim); it maps to exit code 3 and should
be treated as a falsified theorem, not a usage mistake.
"""


class StrataError(Exception):
    """Common base so callers can catch everything from this package at once."""

    code = "error"

    def __init__(self, message: str, *, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class DomainError(StrataError, ValueError):
    """Input outside the documented domain of an operation."""

    code = "domain_error"


class ConsistencyError(StrataError, RuntimeError):
    """A structural guarantee failed to hold on valid input."""

    code = "consistency_error"
