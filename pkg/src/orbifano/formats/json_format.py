from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from typing import Any, Dict, List

try:
    import orjson  # type: ignore
except Exception:  # pragma: no cover
    orjson = None

import jsonschema
from sympy import Rational

from orbifano.formats.base import FormatError, ValidationResult
from orbifano.schemas.registry import Registry, format_rational


def _default(obj: Any) -> Any:
    if isinstance(obj, Rational):
        return format_rational(obj)
    if isinstance(obj, (tuple, set, frozenset)):
        return list(obj)
    if hasattr(obj, "model_dump"):
        return obj.model_dump(mode="json")
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _plain(obj: Any) -> Any:
    """Recursively convert sympy numbers and tuples so both backends agree."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, Rational):
        return int(obj) if obj.q == 1 else format_rational(obj)
    return obj


def dumps(obj: Any) -> str:
    data = _plain(obj)
    if orjson:
        return orjson.dumps(
            data, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS, default=_default
        ).decode("utf-8")
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False, default=_default)


def loads(text: str) -> Any:
    try:
        if orjson:
            return orjson.loads(text)
        return json.loads(text)
    except ValueError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


@lru_cache(maxsize=1)
def registry_schema() -> Dict[str, Any]:
    text = resources.files("orbifano.data").joinpath("registry.schema.json").read_text("utf-8")
    return loads(text)


@lru_cache(maxsize=1)
def registry_validator() -> jsonschema.Draft202012Validator:
    return jsonschema.Draft202012Validator(registry_schema())


def schema_errors(obj: Any) -> List[jsonschema.ValidationError]:
    """JSON Schema violations of a registry document, ordered by location."""
    return sorted(registry_validator().iter_errors(obj), key=lambda e: list(e.absolute_path))


def validate(obj: Dict[str, Any]) -> ValidationResult:
    """Check a registry document against the JSON Schema and the pydantic models."""
    errors: list[str] = []
    for err in schema_errors(obj):
        where = "/".join(str(p) for p in err.absolute_path)
        errors.append(f"{where}: {err.message}" if where else err.message)
    if not errors:
        try:
            Registry.model_validate(obj)
        except Exception as exc:
            errors.append(str(exc))
    return ValidationResult(valid=not errors, errors=errors)
