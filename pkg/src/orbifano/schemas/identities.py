from __future__ import annotations

from typing import Dict, List

from pydantic import BaseModel, ConfigDict


class PfaffianRecord(BaseModel):
    model_config = ConfigDict(extra="ignore")

    family: str
    citation: str
    upper: Dict[str, str]
    equations: List[str]
    singular_points_on_x: int
    singular_point_order: int


class MonomialList(BaseModel):
    model_config = ConfigDict(extra="ignore")

    citation: str
    monomials: List[str]


class SubstitutionCheck(BaseModel):
    model_config = ConfigDict(extra="ignore")

    citation: str
    substitution: Dict[str, str]
    relations: List[str]


class OctahedralRecord(BaseModel):
    model_config = ConfigDict(extra="ignore")

    family: str
    basis: MonomialList
    cube: SubstitutionCheck
    embedding: SubstitutionCheck


class BinomialRecord(BaseModel):
    model_config = ConfigDict(extra="ignore")

    id: str
    polygon: int
    family: str
    citation: str
    substitution: Dict[str, str]
    relation: str


class Identities(BaseModel):
    model_config = ConfigDict(extra="ignore")

    pfaffian: PfaffianRecord
    octahedral: OctahedralRecord
    binomials: List[BinomialRecord]
