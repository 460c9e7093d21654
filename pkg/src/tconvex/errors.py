"""Exceptions raised by the geometry routines."""


class GeometryError(ValueError):
    """Base class for all domain errors."""


class ZeroVector(GeometryError):
    pass


class NotFutureTimelike(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class BadAngle(GeometryError):
    pass


class NotTConvex(GeometryError):
    pass


class DimensionMismatch(GeometryError):
    pass


class NonpositiveCoarea(GeometryError):
    pass


class TooFewFacets(GeometryError):
    pass


class BadInput(GeometryError):
    pass


class Infeasible(GeometryError):
    pass


class NoConvergence(GeometryError):
    pass


class TransversalMiss(GeometryError):
    pass
