"""Exception hierarchy shared by the whole toolkit.

The CLI maps these onto exit codes: Rejection -> 1, ConsistencyError -> 2,
InputError -> 3.  Everything else is a bug.
"""


class ToolError(Exception):
    """Base class for all errors raised deliberately by this package."""


class Rejection(ToolError):
    """Input is mathematically invalid (fails a hypothesis the theory needs)."""


class ConsistencyError(ToolError):
    """Two independent computations of the same quantity disagreed."""


class InputError(ToolError):
    """Malformed file, expression, or command-line usage."""


class DegenerateResultant(ToolError):
    """Resultant requested with respect to a variable absent from an input."""
