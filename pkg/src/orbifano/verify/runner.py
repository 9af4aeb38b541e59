from __future__ import annotations

import logging
from collections import Counter
from typing import Callable, Dict, List, Literal, Optional

from tqdm import tqdm

from orbifano.errors import InputError, OrbifanoError
from orbifano.formats import json_format
from orbifano.io.registry import default_registry
from orbifano.schemas.registry import Registry
from orbifano.schemas.report import ReportEntry
from orbifano.verify.suites import (
    candidates_suite,
    constructions_suite,
    entry,
    identities_suite,
    mmp_suite,
    polygons_suite,
    tables_suite,
)

logger = logging.getLogger(__name__)

SuiteName = Literal["all", "tables", "polygons", "constructions", "mmp", "identities", "candidates"]

SUITES: Dict[str, Callable[[Registry], List[ReportEntry]]] = {
    "tables": tables_suite,
    "polygons": polygons_suite,
    "constructions": constructions_suite,
    "mmp": mmp_suite,
    "identities": identities_suite,
    "candidates": candidates_suite,
}


def _run_suite(name: str, reg: Registry) -> List[ReportEntry]:
    logger.info("suite %s: starting", name)
    try:
        entries = SUITES[name](reg)
    except (OrbifanoError, KeyError) as exc:
        entries = [entry(f"{name}.error", "registry", False, "suite completes", str(exc))]
    counts = Counter(e.status for e in entries)
    logger.info(
        "suite %s: %d pass, %d fail, %d skipped",
        name, counts["pass"], counts["fail"], counts["skipped-with-citation"],
    )
    for e in entries:
        if e.failed:
            logger.warning("%s failed: expected %s, computed %s", e.id, e.expected, e.computed)
    return entries


def verify_all(
    suite: SuiteName = "all",
    registry: Optional[Registry] = None,
    progress: bool = False,
) -> List[ReportEntry]:
    """Run the chosen suites and return their entries sorted by id.

    Raises:
        InputError: for an unknown suite name.
    """
    if suite != "all" and suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    if registry is None:
        try:
            registry = default_registry()
        except OrbifanoError as exc:
            return [entry("registry.load", "embedded registry", False, "schema-valid registry", str(exc))]

    names = list(SUITES) if suite == "all" else [suite]
    entries: List[ReportEntry] = []
    for name in tqdm(names, desc="verify", disable=not progress, ascii=True, dynamic_ncols=True):
        entries.extend(_run_suite(name, registry))
    return sorted(entries, key=lambda e: e.id)


def summarize(entries: List[ReportEntry]) -> Dict[str, int]:
    counts = Counter(e.status for e in entries)
    return {status: counts[status] for status in ("pass", "fail", "skipped-with-citation")}


def report_json(entries: List[ReportEntry]) -> str:
    """Array of {id, citation, status, expected, computed}."""
    return json_format.dumps([e.model_dump() for e in entries])
