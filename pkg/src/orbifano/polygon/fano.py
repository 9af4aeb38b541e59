from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple

from sympy import Rational

from orbifano.errors import InputError, NotConvex, NonPrimitiveVertex, OriginNotInterior
from orbifano.intersection.ci import surface_degree
from orbifano.lattice.normal_forms import (
    AbelianGroup,
    IntVector,
    cokernel_map,
    gcd_of_minors,
    row_echelon,
)
from orbifano.singularity.content import edge_height_width, singularity_content_of_cone
from orbifano.singularity.cyclic import Basket, CyclicQuotient, cone_singularity, det2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SingularityContent:
    """Number of primitive T-cones and the basket of residual singularities."""

    n: int
    basket: Basket

    @property
    def k(self) -> int:
        return len(self.basket)

    @property
    def is_pure_one_third(self) -> bool:
        return self.basket.is_pure_one_third

    def __str__(self) -> str:
        return f"({self.n}, {{{self.basket}}})"


@dataclass(frozen=True)
class Fan2:
    """Complete fan in Z^2 with maximal cones spanned by consecutive rays."""

    rays: Tuple[IntVector, ...]

    @property
    def cones(self) -> List[Tuple[int, int]]:
        n = len(self.rays)
        return [(i, (i + 1) % n) for i in range(n)]


@dataclass(frozen=True)
class FanoPolygon:
    """Fano polygon with vertices counterclockwise from the lexicographically smallest."""

    vertices: Tuple[IntVector, ...]

    @classmethod
    def of(cls, vertices: Sequence[Sequence[int]]) -> "FanoPolygon":
        return cls(validate(vertices))

    def edges(self) -> List[Tuple[IntVector, IntVector]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return ";".join(f"{x},{y}" for x, y in self.vertices)


def _cross(o: Sequence[int], a: Sequence[int], b: Sequence[int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[Sequence]) -> List[tuple]:
    """Strictly convex hull, counterclockwise (monotone chain, collinear points dropped)."""
    pts = sorted(points)
    lower: List[IntVector] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[IntVector] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def validate(vertices: Sequence[Sequence[int]]) -> Tuple[IntVector, ...]:
    """Check the Fano polygon conditions and return the vertices in canonical order.

    Raises:
        NonPrimitiveVertex: a vertex is not a primitive lattice vector.
        NotConvex: a vertex is not a vertex of the convex hull.
        OriginNotInterior: the origin is not strictly inside; names the start of the bad edge.
    """
    pts = [tuple(int(x) for x in v) for v in vertices]
    if any(len(p) != 2 for p in pts):
        raise InputError("polygon vertices must be points of Z^2")
    if len(set(pts)) != len(pts):
        raise InputError("polygon has repeated vertices")
    for p in pts:
        if gcd(p[0], p[1]) != 1:
            raise NonPrimitiveVertex("vertex is not primitive", p)
    if len(pts) < 3:
        raise OriginNotInterior("fewer than three vertices", pts[0] if pts else None)
    hull = convex_hull(pts)
    for p in pts:
        if p not in hull:
            raise NotConvex("not a vertex of the convex hull", p)
    n = len(hull)
    for i in range(n):
        if det2(hull[i], hull[(i + 1) % n]) <= 0:
            raise OriginNotInterior("origin is not strictly inside the edge starting at", hull[i])
    start = hull.index(min(hull))
    return tuple(hull[start:] + hull[:start])


def parse_vertices(text: str) -> FanoPolygon:
    """Polygon from text such as "-1,2;-2,1;1,-1" (pairs also separated by whitespace)."""
    chunks = [c for c in text.replace(";", " ").split() if c]
    try:
        pairs = [tuple(int(x) for x in c.strip("()").split(",")) for c in chunks]
    except ValueError as exc:
        raise InputError(f"cannot read vertices from {text!r}") from exc
    return FanoPolygon.of(pairs)


def face_fan(p: FanoPolygon) -> Fan2:
    return Fan2(p.vertices)


def edge_data(p: FanoPolygon) -> List[Tuple[int, int]]:
    """(height, width) of every edge in cyclic order."""
    return [edge_height_width(u, v) for u, v in p.edges()]


def cone_types(p: FanoPolygon) -> List[CyclicQuotient]:
    return [cone_singularity(u, v) for u, v in p.edges()]


def lattice_points_on_boundary(p: FanoPolygon) -> int:
    return sum(width for _, width in edge_data(p))


def singularity_content(p: FanoPolygon) -> SingularityContent:
    n = 0
    residues: List[CyclicQuotient] = []
    for u, v in p.edges():
        count, res = singularity_content_of_cone(u, v)
        n += count
        if res is not None:
            residues.append(res)
    return SingularityContent(n, Basket.of(residues))


def degree_via_formula(content: SingularityContent) -> Rational:
    """12 - n - 5k/3 for a basket of 1/3(1,1) points."""
    if not content.is_pure_one_third:
        raise ValueError(f"basket {content.basket} is not made of 1/3(1,1) points")
    return Rational(12 - content.n) - Rational(5 * content.k, 3)


def h0_proxy(content: SingularityContent) -> Rational:
    """1 + d - k/3, the dimension of the anticanonical linear system."""
    return 1 + degree_via_formula(content) - Rational(content.k, 3)


def toric_degree(f: Fan2) -> Rational:
    return surface_degree(f.rays)


def ray_lattice_index(f: Fan2) -> int:
    return gcd_of_minors([list(r) for r in f.rays], 2)


def class_group(f: Fan2) -> AbelianGroup:
    """Cl = Z^rays / image of the dual lattice M under m -> (<m, rho_i>)."""
    return cokernel_map([list(r) for r in f.rays]).group


def fano_index(f: Fan2) -> int:
    """Largest f such that -K = f A for some A in Cl."""
    cmap = cokernel_map([list(r) for r in f.rays])
    image = cmap.image([1] * len(f.rays))
    factors = cmap.group.invariant_factors
    torsion, free = image[: len(factors)], image[len(factors) :]
    bound = 0
    for x in free:
        bound = gcd(bound, abs(x))
    for candidate in range(bound, 0, -1):
        if bound % candidate:
            continue
        if all(c % gcd(candidate, t) == 0 for c, t in zip(torsion, factors)):
            return candidate
    return 1


def normal_form(p: FanoPolygon) -> Tuple[int, ...]:
    """Complete invariant of the polygon up to GL(2, Z).

    The Hermite form of the 2 x n vertex matrix pins down an ordered vertex
    sequence up to GL(2, Z); minimizing over rotations and reflections removes
    the choice of starting vertex and orientation.
    """
    verts = list(p.vertices)
    n = len(verts)
    best: Tuple[int, ...] | None = None
    for seq in (verts, verts[::-1]):
        for shift in range(n):
            ordered = seq[shift:] + seq[:shift]
            hnf = row_echelon([[v[0] for v in ordered], [v[1] for v in ordered]])
            key = tuple(int(x) for x in hnf)
            if best is None or key < best:
                best = key
    return best
