#!/usr/bin/env python3
"""
Exception hierarchy for the d-step SAT toolkit.
"""


class DStepError(Exception):
    """Base class for all toolkit errors."""


class DegenerateTupleError(DStepError, ValueError):
    """A tuple query repeats an element."""

    def __init__(self, tup):
        super().__init__(f"degenerate tuple {tuple(tup)}")
        self.tuple = tuple(tup)


class GeneralPositionError(DStepError, ValueError):
    """Some r columns of a point configuration have zero determinant."""

    def __init__(self, basis):
        super().__init__(f"not in general position: columns {tuple(basis)} are dependent")
        self.basis = tuple(basis)


class PathComplexError(DStepError, ValueError):
    """Pivots are inconsistent or the facets do not form a path complex."""

    def __init__(self, message: str, facets: tuple = ()):
        super().__init__(message)
        self.facets = facets


class EncodingError(DStepError, ValueError):
    """A CNF fragment cannot be built from its input."""


class BoundsContradiction(DStepError):
    """Propagation produced lo > hi for some Delta(d, n)."""

    def __init__(self, cell, lo, hi, chain):
        super().__init__(f"Delta{cell}: lower bound {lo} exceeds upper bound {hi} ({' <- '.join(chain)})")
        self.cell = cell
        self.chain = chain


class ModelError(DStepError, ValueError):
    """A solver assignment does not cover every variable."""


class BackendError(DStepError, RuntimeError):
    """The SAT backend failed to produce an answer."""
