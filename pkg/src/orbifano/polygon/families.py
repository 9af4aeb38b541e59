from __future__ import annotations

import logging
from typing import Dict, Optional, Tuple

from orbifano.errors import NoFamily
from orbifano.io.registry import default_registry
from orbifano.polygon.fano import FanoPolygon, degree_via_formula, normal_form, singularity_content
from orbifano.schemas.registry import Registry

logger = logging.getLogger(__name__)


def _polygon_index(registry: Registry) -> Dict[Tuple[int, ...], str]:
    return {
        normal_form(FanoPolygon.of(rec.vertices)): rec.deforms_to for rec in registry.polygons
    }


def match_family(p: FanoPolygon, registry: Optional[Registry] = None) -> str:
    """Name of the family that the toric surface of p qG-deforms to.

    A polygon of the registry (up to GL(2, Z)) resolves to its recorded
    family; any other polygon must have a (k, d) shared by no two families.

    Raises:
        NoFamily: basket not pure 1/3(1,1), (k, d) unknown, or ambiguous.
    """
    if registry is None:
        registry = default_registry()
    content = singularity_content(p)
    if not content.is_pure_one_third:
        raise NoFamily(f"basket {content.basket} is not made of 1/3(1,1) points")
    k, d = content.k, degree_via_formula(content)
    known = _polygon_index(registry).get(normal_form(p))
    if known is not None:
        return known
    candidates = registry.by_invariants().get((k, d), [])
    if not candidates:
        raise NoFamily(f"no family with k={k}, K^2={d}")
    if len(candidates) > 1:
        names = ", ".join(c.name for c in candidates)
        raise NoFamily(f"k={k}, K^2={d} is shared by {names}; polygon is not in the registry")
    logger.debug("matched polygon %s by invariants to %s", p, candidates[0].name)
    return candidates[0].name
