from __future__ import annotations

import logging
from typing import Sequence

from sympy import Rational

from orbifano.errors import DimensionMismatch
from orbifano.intersection.graded import GradedRingContext, top_intersection
from orbifano.lattice.normal_forms import MatrixLike
from orbifano.toric.chambers import fan_from_chamber
from orbifano.toric.weights import WeightMatrix

logger = logging.getLogger(__name__)


def context_for(d: MatrixLike | WeightMatrix, omega: Sequence[int]) -> GradedRingContext:
    """Intersection context of the GIT quotient of D at omega."""
    wm = d if isinstance(d, WeightMatrix) else WeightMatrix.of(d)
    fan = fan_from_chamber(wm, omega)
    return GradedRingContext.from_fan(fan.rays, fan.cones, weights=wm.rows)


def ci_degree(
    d: MatrixLike | WeightMatrix, omega: Sequence[int], bundles: Sequence[Sequence[int]]
) -> Rational:
    """Anticanonical degree K_X^2 of a complete intersection surface X in F.

    K_X^2 = L_1 ... L_c . A . A with A = -K_F - sum L_i.

    Raises:
        DimensionMismatch: unless dim F - number of bundles == 2.
    """
    wm = d if isinstance(d, WeightMatrix) else WeightMatrix.of(d)
    ctx = context_for(wm, omega)
    if ctx.dim - len(bundles) != 2:
        raise DimensionMismatch(
            f"{len(bundles)} bundles in a {ctx.dim}-fold do not cut out a surface"
        )
    adjoint = list(wm.anticanonical())
    for bundle in bundles:
        if len(bundle) != wm.rank:
            raise DimensionMismatch(f"bundle {tuple(bundle)} has length {len(bundle)}, expected {wm.rank}")
        adjoint = [a - b for a, b in zip(adjoint, bundle)]
    classes = [ctx.lift(b) for b in bundles] + [ctx.lift(adjoint)] * 2
    degree = top_intersection(ctx, classes)
    logger.debug("degree of complete intersection %s in %s: %s", list(bundles), wm.rows, degree)
    return degree


def surface_degree(vertices: Sequence[Sequence[int]]) -> Rational:
    """K^2 of the toric surface of a Fano polygon from its face fan."""
    ctx = GradedRingContext.from_polygon(vertices)
    return top_intersection(ctx, [ctx.anticanonical(), ctx.anticanonical()])
