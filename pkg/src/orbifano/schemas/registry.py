from __future__ import annotations

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import Rational

SCHEMA_VERSION = "1.0"

ConstructionKind = Literal[
    "weights", "grassmannian", "pfaffian", "nonsimplicial", "toric_surface", "quotient"
]
Series = Literal["X", "B", "S"]


def parse_rational(text: str) -> Rational:
    """'p/q' or 'p' to an exact rational."""
    num, _, den = str(text).partition("/")
    return Rational(int(num), int(den) if den else 1)


def format_rational(value: object) -> str:
    q = Rational(value)
    return str(q.p) if q.q == 1 else f"{q.p}/{q.q}"


class Construction(BaseModel):
    model_config = ConfigDict(extra="ignore")

    kind: ConstructionKind
    citation: str = ""
    weights: Optional[List[List[int]]] = None
    labels: Optional[List[str]] = None
    bundles: List[List[int]] = Field(default_factory=list)
    nef: Optional[List[List[int]]] = None
    printed_nef: Optional[List[List[int]]] = None
    nef_erratum: Optional[str] = None
    omega: Optional[List[int]] = None
    twist: Optional[List[int]] = None
    rays: Optional[List[List[int]]] = None
    bundle_divisor: Optional[List[int]] = None
    bundle_count: Optional[int] = None
    grassmannian_weights: Optional[List[str]] = None
    bundle_degrees: Optional[List[int]] = None
    polygon_id: Optional[int] = None
    group_order: Optional[int] = None
    group_weights: Optional[List[int]] = None
    note: Optional[str] = None
    erratum: Optional[str] = None

    def bundle_classes(self) -> List[List[int]]:
        """Bundles as classes in Z^r: the stored lists are the bundle columns, one per bundle."""
        return [list(b) for b in self.bundles]


class FamilyRecord(BaseModel):
    model_config = ConfigDict(extra="ignore")

    name: str
    series: Series
    k: int
    degree: str
    fano_index: int
    h0: int
    r: int
    moduli: int
    pi1: str = "0"
    typical: bool = False
    citation: str = ""
    construction: Construction

    @field_validator("degree")
    @classmethod
    def _degree_rational(cls, v: str) -> str:
        try:
            parse_rational(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"degree {v!r} is not a rational number") from exc
        return v

    @property
    def d(self) -> Rational:
        return parse_rational(self.degree)


class PolygonRecord(BaseModel):
    model_config = ConfigDict(extra="ignore")

    id: int
    vertices: List[List[int]]
    n: int
    k: int
    deforms_to: str


class DefectiveRow(BaseModel):
    model_config = ConfigDict(extra="ignore")

    k: int
    degree: str
    r: int
    sigma_at_least: int
    occurs: bool

    @property
    def d(self) -> Rational:
        return parse_rational(self.degree)


class Registry(BaseModel):
    model_config = ConfigDict(extra="ignore")

    version: str = SCHEMA_VERSION
    families: List[FamilyRecord]
    polygons: List[PolygonRecord]
    defective: List[DefectiveRow] = Field(default_factory=list)

    def family(self, name: str) -> FamilyRecord:
        for rec in self.families:
            if rec.name == name:
                return rec
        raise KeyError(name)

    def polygon(self, pid: int) -> PolygonRecord:
        for rec in self.polygons:
            if rec.id == pid:
                return rec
        raise KeyError(pid)

    def by_invariants(self) -> Dict[tuple, List[FamilyRecord]]:
        """Families grouped by (k, d)."""
        out: Dict[tuple, List[FamilyRecord]] = {}
        for rec in self.families:
            out.setdefault((rec.k, rec.d), []).append(rec)
        return out

    def typical(self) -> List[FamilyRecord]:
        return [rec for rec in self.families if rec.typical]
