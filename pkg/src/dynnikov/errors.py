"""Exception hierarchy.

Input errors (bad text, bad shapes, out-of-range generators, violated move
preconditions) derive from :class:`InputError`; conditions that can only
arise from a bug or an exceeded integer budget derive from
:class:`InternalError`.  The CLI maps the two families to exit codes 2 and 3.
"""


class DynnikovError(Exception):
    pass


class InputError(DynnikovError, ValueError):
    pass


class InternalError(DynnikovError, RuntimeError):
    pass


class ZeroVector(InputError):
    """All coordinates are zero; no lamination has these coordinates."""


class BadShape(InputError):
    pass


class ParseError(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class PreconditionViolated(InputError):
    pass


class Diverged(InternalError):
    """The complexity failed to decrease across a move."""


class InconsistentDiagram(InternalError):
    pass


class IntegerOverflow(InternalError):
    pass
