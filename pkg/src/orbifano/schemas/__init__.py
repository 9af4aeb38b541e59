from orbifano.schemas.identities import (
    BinomialRecord,
    Identities,
    OctahedralRecord,
    PfaffianRecord,
    SubstitutionCheck,
)
from orbifano.schemas.registry import (
    Construction,
    DefectiveRow,
    FamilyRecord,
    PolygonRecord,
    Registry,
    SCHEMA_VERSION,
    format_rational,
    parse_rational,
)
from orbifano.schemas.report import ReportEntry, Status

__all__ = [
    "BinomialRecord",
    "Construction",
    "DefectiveRow",
    "FamilyRecord",
    "Identities",
    "OctahedralRecord",
    "PfaffianRecord",
    "PolygonRecord",
    "Registry",
    "ReportEntry",
    "SCHEMA_VERSION",
    "Status",
    "SubstitutionCheck",
    "format_rational",
    "parse_rational",
]
