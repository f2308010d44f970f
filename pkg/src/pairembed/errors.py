"""Exception types shared across the package."""

from __future__ import annotations


class PairEmbedError(Exception):
    """Base class for all library errors."""


class PairValidationError(PairEmbedError):
    """A candidate partition pair violates at least one invariant.

    Carries the full list of violations so callers can report every
    problem at once instead of fixing them one by one.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class VertexSetMismatch(PairEmbedError):
    """A graph was expected to live on exactly the pair's universe."""


class NotASupport(PairEmbedError):
    """A graph fails the support property for some block."""


class NotPlanar(PairEmbedError):
    """A planar graph was required."""


class TooLarge(PairEmbedError):
    """Input exceeds a brute-force routine's soft size limit."""


class CollinearPoints(PairEmbedError):
    """A point set violates the general-position requirement."""


class SizeMismatch(PairEmbedError):
    """A point set has the wrong cardinality."""


class NotFullyEmbeddable(PairEmbedError):
    """A full embedding was requested for a pair whose bipartite map
    is not planar."""


class SelfIntersectingPolygon(PairEmbedError):
    """A region polygon is not simple."""


class TangentBoundaries(PairEmbedError):
    """Two region boundaries touch without crossing transversally."""


class BadDimensions(PairEmbedError):
    """Grid generator parameters are out of range."""


class InconsistentMRR(PairEmbedError):
    """Leg orders / nesting of a rectilinear representation cannot be
    realized without same-sign clause routes overlapping."""


class AssignmentDoesNotSatisfy(PairEmbedError):
    """The provided variable assignment leaves some clause unsatisfied."""
