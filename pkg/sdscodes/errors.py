#!/usr/bin/env python3

class SdsError(Exception):
    """Base class of every error raised by the platform."""
    kind = "error"


class DimensionError(SdsError, ValueError):
    """A length, index, arity or step is out of range."""
    kind = "dimension"


class FileFormatError(SdsError, ValueError):
    """An input file (SDS definition, code, edge list) is malformed."""
    kind = "file_format"


class BudgetExceeded(SdsError):
    """An enumeration cap, node budget or time budget has been exhausted.

    Attributes:
        resume (dict): optional state to resume the interrupted computation.
    """
    kind = "budget"

    def __init__(self, message, resume=None):
        super().__init__(message)
        self.resume = resume or {}


class InvalidCliqueError(SdsError, ValueError):
    """The members given as a clique of the hat graph are not a clique."""
    kind = "invalid_clique"


class PrescriptionConflict(SdsError):
    """Two prescription rules assign different values to the same input."""
    kind = "prescription_conflict"

    def __init__(self, message, state=None, values=None):
        super().__init__(message)
        self.state  = state
        self.values = values


class IncompatibilityViolation(SdsError):
    """Two nonadjacent hat-graph vertices are both 2-periodic."""
    kind = "incompatibility"


class PreconditionError(SdsError, ValueError):
    """Arguments violate the precondition of an operation."""
    kind = "precondition"
