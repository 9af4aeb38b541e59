from orbifano.intersection.ci import ci_degree, context_for, surface_degree
from orbifano.intersection.graded import (
    DivisorClass,
    GradedRingContext,
    cone_multiplicity,
    top_intersection,
)

__all__ = [
    "DivisorClass",
    "GradedRingContext",
    "ci_degree",
    "cone_multiplicity",
    "context_for",
    "surface_degree",
    "top_intersection",
]
