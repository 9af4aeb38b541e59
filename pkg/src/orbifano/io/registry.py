from __future__ import annotations

import logging
from collections import Counter
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional

from orbifano.errors import SchemaError
from orbifano.formats import json_format
from orbifano.formats.base import FormatError
from orbifano.schemas.identities import Identities
from orbifano.schemas.registry import Registry

logger = logging.getLogger(__name__)

FAMILY_COUNT = 29
POLYGON_COUNT = 26


def _record_name(obj: Dict[str, Any], path: List[Any]) -> Optional[str]:
    if len(path) < 2 or not isinstance(path[1], int):
        return str(path[0]) if path else None
    section, idx = path[0], path[1]
    try:
        item = obj[section][idx]
    except (KeyError, IndexError, TypeError):
        return f"{section}[{idx}]"
    key = item.get("name") if isinstance(item, dict) else None
    if key is None and isinstance(item, dict) and "id" in item:
        key = f"polygon {item['id']}"
    return key or f"{section}[{idx}]"


def _check_schema(obj: Dict[str, Any]) -> None:
    errors = json_format.schema_errors(obj)
    if errors:
        err = errors[0]
        path = list(err.absolute_path)
        fieldname = ".".join(str(p) for p in path[2:]) or None
        raise SchemaError(err.message, _record_name(obj, path), fieldname)


def _check_invariants(reg: Registry) -> None:
    dup = [name for name, c in Counter(f.name for f in reg.families).items() if c > 1]
    if dup:
        raise SchemaError("duplicate family name", dup[0], "name")
    dup_ids = [pid for pid, c in Counter(p.id for p in reg.polygons).items() if c > 1]
    if dup_ids:
        raise SchemaError("duplicate polygon id", f"polygon {dup_ids[0]}", "id")
    if len(reg.families) != FAMILY_COUNT:
        raise SchemaError(f"expected {FAMILY_COUNT} families, found {len(reg.families)}", "families")
    if len(reg.polygons) != POLYGON_COUNT:
        raise SchemaError(f"expected {POLYGON_COUNT} polygons, found {len(reg.polygons)}", "polygons")
    names = {f.name for f in reg.families}
    for poly in reg.polygons:
        if poly.deforms_to not in names:
            raise SchemaError(f"unknown family {poly.deforms_to!r}", f"polygon {poly.id}", "deforms_to")
    for fam in reg.families:
        expected = f"{fam.series}_{{{fam.k},{fam.degree}}}"
        if fam.name != expected:
            raise SchemaError(f"name does not match series, k and degree ({expected})", fam.name, "name")


def registry_from_dict(obj: Any) -> Registry:
    """Validate a parsed registry document and build the models.

    Raises:
        SchemaError: naming the offending record and field.
    """
    if not isinstance(obj, dict):
        raise SchemaError("registry document must be a JSON object")
    _check_schema(obj)
    try:
        reg = Registry.model_validate(obj)
    except Exception as exc:
        raise SchemaError(str(exc)) from exc
    _check_invariants(reg)
    return reg


def load_registry(path: Optional[Path] = None) -> Registry:
    """Load the embedded registry, or the file at `path` when given."""
    if path is None:
        text = resources.files("orbifano.data").joinpath("registry.json").read_text("utf-8")
        source = "embedded registry"
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise SchemaError(f"cannot read registry: {exc}", str(path)) from exc
        source = str(path)
    try:
        obj = json_format.loads(text)
    except FormatError as exc:
        raise SchemaError(str(exc), source) from exc
    reg = registry_from_dict(obj)
    logger.info(
        "loaded %s: %d families, %d polygons", source, len(reg.families), len(reg.polygons)
    )
    return reg


@lru_cache(maxsize=1)
def default_registry() -> Registry:
    """The embedded registry, loaded once."""
    return load_registry()


def load_identities(path: Optional[Path] = None) -> Identities:
    """Symbolic identity data (Pfaffian, octahedral and binomial checks)."""
    if path is None:
        text = resources.files("orbifano.data").joinpath("identities.json").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    try:
        return Identities.model_validate(json_format.loads(text))
    except (FormatError, ValueError) as exc:
        raise SchemaError(str(exc), "identities") from exc
