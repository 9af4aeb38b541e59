from __future__ import annotations

from typing import Optional, Sequence


class OrbifanoError(Exception):
    pass


class InputError(OrbifanoError):
    pass


class NonConvexCone(OrbifanoError):
    pass


class DegenerateCone(OrbifanoError):
    pass


class SmoothPoint(OrbifanoError):
    pass


class PolygonError(OrbifanoError):
    def __init__(self, message: str, vertex: Optional[Sequence[int]] = None) -> None:
        self.vertex = tuple(vertex) if vertex is not None else None
        super().__init__(message if vertex is None else f"{message}: {self.vertex}")


class NotConvex(PolygonError):
    pass


class OriginNotInterior(PolygonError):
    pass


class NonPrimitiveVertex(PolygonError):
    pass


class NoFamily(OrbifanoError):
    pass


class OnWall(OrbifanoError):
    pass


class NotWellFormed(OrbifanoError):
    pass


class NotSurjective(OrbifanoError):
    pass


class DimensionMismatch(OrbifanoError):
    pass


class CannotReduce(OrbifanoError):
    pass


class NotAntisymmetric(OrbifanoError):
    pass


class NotApplicable(OrbifanoError):
    pass


class InvalidState(OrbifanoError):
    pass


class BadCongruence(OrbifanoError):
    pass


class SchemaError(OrbifanoError):
    def __init__(self, message: str, record: Optional[str] = None, field: Optional[str] = None) -> None:
        self.record = record
        self.field = field
        where = ".".join(p for p in (record, field) if p)
        super().__init__(f"{where}: {message}" if where else message)
