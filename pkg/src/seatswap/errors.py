"""Exception types shared across the package.

Three families matter to callers: ``InputError`` for anything wrong with
user-supplied data, ``LimitError`` for documented preconditions or resource
limits that were not met, and ``InternalError`` for invariant violations
that indicate a bug or a broken caller contract.  The command-line front
end maps these families to exit codes 1 and 2 (internal errors also exit 2,
since they surface broken preconditions).
"""


class SeatSwapError(Exception):
    """Base class for every error raised by this package."""


class InputError(SeatSwapError):
    """User-supplied data is invalid (documents, labels, parameters)."""


class MalformedDocument(InputError):
    """A JSON document is syntactically or structurally invalid."""


class UnknownAgent(InputError):
    """An arc, edge, or assignment references an undeclared agent or seat."""


class ShapeMismatch(InputError):
    """A seat graph's edges are inconsistent with its declared shape."""


class SelfLoop(InputError):
    """A preference arc or seat edge connects a vertex to itself."""


class SizeMismatch(InputError):
    """Component sizes disagree (agents vs. seats vs. preference graph)."""


class BadParameter(InputError):
    """A parameter is outside its documented domain."""


class SameAgent(InputError):
    """An operation requiring two distinct agents got the same one twice."""


class NotACycle(InputError):
    """An operation restricted to cycle seat graphs got another shape."""


class NotAPath(InputError):
    """An operation restricted to path seat graphs got another shape."""


class LimitError(SeatSwapError):
    """A documented precondition or resource limit was exceeded."""


class BudgetExceeded(LimitError):
    """The instance is too large for exact feedback-set search."""


class TooLarge(LimitError):
    """The instance is too large for exhaustive enumeration."""


class InsufficientLeaves(LimitError):
    """The seat graph has fewer leaves than the feedback set has agents."""


class NotAcyclic(LimitError):
    """A supplied vertex set does not make the preference graph acyclic."""


class InternalError(SeatSwapError):
    """An internal invariant failed; indicates a bug or broken caller contract."""


class TypeTwoDetected(InternalError):
    """A partition-repair precondition was violated (not minimal, or a
    blocking pair straddling two paths, which minimality rules out)."""


class NoInsertionPoint(InternalError):
    """Path insertion failed although the co-approver condition guarantees
    a slot; the caller violated that condition."""
