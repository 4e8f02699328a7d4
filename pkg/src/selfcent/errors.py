"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class GroupError(Exception):
    """Base class for every error raised by selfcent."""


class InputError(GroupError, ValueError):
    """Bad arguments: index out of range, invalid parameters, wrong shape."""


class CapabilityError(GroupError):
    """An operation would exceed a configured size cap."""

    def __init__(self, message: str, cap: int | None = None):
        super().__init__(message)
        self.cap = cap


class ConstructionError(GroupError, ValueError):
    """A table or product could not be built as a valid group."""


class InconsistentPresentation(ConstructionError):
    """A pc presentation does not define a group of the advertised order.

    ``triple`` holds the failing (x, y, z) element indices when the failure
    is an associativity defect, or a relation identifier otherwise.
    """

    def __init__(self, message: str, triple: tuple | None = None):
        super().__init__(message)
        self.triple = triple


class MethodDisagreement(GroupError):
    """Two membership methods returned different verdicts."""
