from __future__ import annotations

import logging
from collections import defaultdict
from typing import Dict, List, Sequence

from orbifano.errors import CannotReduce, InputError
from orbifano.sections.strata import quotient_type
from orbifano.singularity.cyclic import Basket, CyclicQuotient

logger = logging.getLogger(__name__)


def quotient_surface_basket(
    group_order: int, group_weights: Sequence[int], degree: int
) -> Basket:
    """Singularities of X/mu_n for a general invariant surface X of given degree in P^3.

    mu_n acts on P^3 diagonally with `group_weights`. Fixed points of the
    action are the projectivised eigenspaces. An isolated fixed point lies
    on X only if no invariant power of its coordinate exists. A fixed line
    meets X in `degree` points when the invariant forms restrict to it
    nontrivially, and each such point has the tangent weights of the two
    coordinates off the line, shifted by the weight of the line.

    Raises:
        CannotReduce: if a fixed point lies on X, X contains a fixed line,
            or an eigenspace has dimension above two.
    """
    if len(group_weights) != 4:
        raise InputError(f"expected weights on four coordinates, got {list(group_weights)}")
    weights = [w % group_order for w in group_weights]
    spaces: Dict[int, List[int]] = defaultdict(list)
    for j, w in enumerate(weights):
        spaces[w].append(j)

    points: List[CyclicQuotient] = []
    for a, coords in sorted(spaces.items()):
        if len(coords) == 1:
            if (degree * a) % group_order:
                raise CannotReduce(f"isolated fixed point x{coords[0]} lies on X")
            continue
        if len(coords) > 2:
            raise CannotReduce(f"eigenspace {coords} has dimension {len(coords)}")
        if (degree * a) % group_order:
            raise CannotReduce(f"X contains the fixed line x{coords[0]}, x{coords[1]}")
        b, c = [(w - a) % group_order for j, w in enumerate(weights) if j not in coords]
        point = quotient_type(group_order, b, c)
        logger.debug("fixed line %s meets X in %d points of type %s", coords, degree, point)
        points.extend([point] * degree)
    return Basket.of(points)
