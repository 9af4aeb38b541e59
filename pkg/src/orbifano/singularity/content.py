from __future__ import annotations

from math import gcd
from typing import Optional, Sequence, Set, Tuple

from orbifano.lattice.cones import primitive
from orbifano.singularity.cyclic import CyclicQuotient, cone_singularity, det2


def edge_height_width(u: Sequence[int], v: Sequence[int]) -> Tuple[int, int]:
    """Lattice height of the line through u and v, and lattice length of the segment [u, v]."""
    g = gcd(v[0] - u[0], v[1] - u[1])
    if g == 0:
        raise ValueError("segment has zero length")
    return abs(det2(u, v)) // g, g


def singularity_content_of_cone(
    u: Sequence[int], v: Sequence[int]
) -> Tuple[int, Optional[CyclicQuotient]]:
    """Number of primitive T-cones and the residual cone type of the cone over [u, v].

    The segment of width w at height h splits into floor(w/h) primitive T-cones;
    a leftover piece of width w mod h is the residue.
    """
    u, v = primitive(u), primitive(v)
    cone_singularity(u, v)  # rejects parallel rays
    height, width = edge_height_width(u, v)
    n, rest = divmod(width, height)
    if rest == 0:
        return n, None
    step = ((v[0] - u[0]) // width, (v[1] - u[1]) // width)
    end = (u[0] + rest * step[0], u[1] + rest * step[1])
    return n, cone_singularity(u, end)


def residue(s: CyclicQuotient) -> Optional[CyclicQuotient]:
    """Residual singularity of 1/r(1,a); None for class T points."""
    if s.is_smooth:
        return None
    return singularity_content_of_cone((0, 1), (s.r, -s.a))[1]


def is_class_R(s: CyclicQuotient) -> bool:
    """True iff the point is its own residue (no T-cone can be split off)."""
    if s.is_smooth:
        return False
    n, res = singularity_content_of_cone((0, 1), (s.r, -s.a))
    return n == 0 and res == s


def class_t_family(r_max: int) -> Set[CyclicQuotient]:
    """All 1/(d n^2)(1, d n c - 1) with gcd(n, c) = 1 and order at most r_max."""
    out: Set[CyclicQuotient] = set()
    n = 1
    while n * n <= r_max:
        for d in range(1, r_max // (n * n) + 1):
            for c in range(1, n + 1):
                if gcd(n, c) != 1 or (n > 1 and c == n):
                    continue
                r = d * n * n
                if r >= 2:
                    out.add(CyclicQuotient.of(r, d * n * c - 1))
        n += 1
    return out


def one_third_residue_family(r_max: int) -> Set[CyclicQuotient]:
    """All 1/(3(3m+1))(1, 2(3m+1) - 1) of order at most r_max."""
    out: Set[CyclicQuotient] = set()
    m = 0
    while 3 * (3 * m + 1) <= r_max:
        w = 3 * m + 1
        out.add(CyclicQuotient.of(3 * w, 2 * w - 1))
        m += 1
    return out
