from orbifano.verify.runner import SUITES, SuiteName, report_json, summarize, verify_all
from orbifano.verify.suites import (
    NUMERICAL_BOUNDS,
    PRO2_BOUNDS,
    candidates_suite,
    constructions_suite,
    identities_suite,
    mmp_suite,
    polygons_suite,
    tables_suite,
)

__all__ = [
    "NUMERICAL_BOUNDS",
    "PRO2_BOUNDS",
    "SUITES",
    "SuiteName",
    "candidates_suite",
    "constructions_suite",
    "identities_suite",
    "mmp_suite",
    "polygons_suite",
    "report_json",
    "summarize",
    "tables_suite",
    "verify_all",
]
