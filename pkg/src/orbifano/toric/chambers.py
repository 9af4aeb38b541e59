from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import List, Sequence, Tuple

from orbifano.errors import InputError, NotWellFormed, OnWall
from orbifano.lattice.cones import (
    dot,
    extreme_rays,
    facet_normals,
    in_cone,
    in_simplicial_cone,
    rank,
    same_cone,
)
from orbifano.lattice.normal_forms import AbelianGroup, IntVector, MatrixLike, cokernel_map
from orbifano.toric.weights import WeightMatrix, is_wellformed, kernel_rays

logger = logging.getLogger(__name__)

IndexSet = Tuple[int, ...]


@dataclass(frozen=True)
class Chamber:
    """Full-dimensional cone of the secondary fan, by primitive generators in sorted order."""

    rays: Tuple[IntVector, ...]

    def contains(self, v: Sequence[int]) -> bool:
        return in_cone(list(self.rays), v)

    def same_as(self, generators: Sequence[Sequence[int]]) -> bool:
        return same_cone(list(self.rays), [tuple(g) for g in generators])

    def contains_interior(self, v: Sequence[int]) -> bool:
        """Strictly inside: positive on every facet normal of the chamber."""
        return all(dot(n, v) > 0 for n in facet_normals(list(self.rays)))

    @property
    def is_simplicial(self) -> bool:
        return len(self.rays) == len(self.rays[0])

    def __str__(self) -> str:
        return "⟨" + ", ".join(str(r) for r in self.rays) + "⟩"


@dataclass(frozen=True)
class Chart:
    """Affine quotient chart {x_i != 0 for i in pivots} = C^{m-r} / stabilizer."""

    pivots: IndexSet
    stabilizer: AbelianGroup
    weights: Tuple[Tuple[int, IntVector], ...]

    @property
    def order(self) -> int:
        return self.stabilizer.order

    @property
    def is_smooth(self) -> bool:
        return self.stabilizer.is_trivial

    @property
    def coordinates(self) -> IndexSet:
        return tuple(j for j, _ in self.weights)

    def cyclic_weights(self) -> Tuple[int, ...]:
        """Weights as residues mod the order of a cyclic stabilizer."""
        if len(self.stabilizer.invariant_factors) > 1:
            raise ValueError(f"stabilizer {self.stabilizer} is not cyclic")
        return tuple(w[0] if w else 0 for _, w in self.weights)

    def describe(self, labels: Sequence[str]) -> str:
        coords = ",".join(labels[j] for j in self.coordinates)
        if self.is_smooth:
            return f"smooth_{{{coords}}}"
        if len(self.stabilizer.invariant_factors) == 1:
            body = ",".join(str(w) for w in self.cyclic_weights())
            return f"1/{self.order}({body})_{{{coords}}}"
        body = ",".join(str(w) for _, w in self.weights)
        return f"{self.stabilizer}({body})_{{{coords}}}"


@dataclass(frozen=True)
class SimplicialFan:
    """Fan of the GIT quotient: maximal cones are index sets into the ray list."""

    rays: Tuple[IntVector, ...]
    cones: Tuple[IndexSet, ...]

    @property
    def dim(self) -> int:
        return len(self.rays[0]) if self.rays else 0

    @property
    def ray_count(self) -> int:
        return len(self.rays)

    def is_complete(self) -> bool:
        """Rays span and positively span every coordinate direction."""
        rays = list(self.rays)
        if rank(rays) != self.dim:
            return False
        for j in range(self.dim):
            for sign in (1, -1):
                e = tuple(sign if i == j else 0 for i in range(self.dim))
                if not in_cone(rays, e):
                    return False
        return True


def _weights(d: MatrixLike | WeightMatrix) -> WeightMatrix:
    return d if isinstance(d, WeightMatrix) else WeightMatrix.of(d)


def _check_omega(wm: WeightMatrix, omega: Sequence[int]) -> None:
    if len(omega) != wm.rank:
        raise InputError(f"stability condition has length {len(omega)}, expected {wm.rank}")
    cols = wm.columns
    for subset in combinations(range(wm.ncols), wm.rank - 1):
        vecs = [cols[i] for i in subset]
        if rank(vecs) != wm.rank - 1:
            continue
        if in_cone(vecs, omega):
            raise OnWall(f"{tuple(omega)} lies on the wall spanned by columns {list(subset)}")


def irrelevant_ideal(d: MatrixLike | WeightMatrix, omega: Sequence[int]) -> List[IndexSet]:
    """Index sets I, |I| = r, with omega inside the cone over the columns D_I.

    Each I is a minimal monomial generator x_I of the irrelevant ideal.

    Raises:
        OnWall: if omega lies on a wall of the secondary fan.
    """
    wm = _weights(d)
    _check_omega(wm, omega)
    cols = wm.columns
    found: List[IndexSet] = []
    for subset in combinations(range(wm.ncols), wm.rank):
        vecs = [cols[i] for i in subset]
        if rank(vecs) == wm.rank and in_simplicial_cone(vecs, omega):
            found.append(subset)
    if not found:
        raise InputError(f"{tuple(omega)} is outside the cone spanned by the weights")
    return found


def chamber_of(d: MatrixLike | WeightMatrix, omega: Sequence[int]) -> Chamber:
    """Chamber of the secondary fan containing omega in its interior."""
    wm = _weights(d)
    cols = wm.columns
    normals: List[IntVector] = []
    for subset in irrelevant_ideal(wm, omega):
        for n in facet_normals([cols[i] for i in subset]):
            if n not in normals:
                normals.append(n)
    logger.debug("chamber of %s cut out by %d inequalities", tuple(omega), len(normals))
    return Chamber(tuple(extreme_rays(normals, omega)))


def nef_cone(d: MatrixLike | WeightMatrix, omega: Sequence[int]) -> Chamber:
    return chamber_of(d, omega)


def _normalize_cyclic(order: int, classes: List[IntVector]) -> List[IntVector]:
    """Rescale by the unit of Z/order giving the lexicographically smallest weights."""
    best = classes
    for unit in range(2, order):
        if gcd(unit, order) != 1:
            continue
        trial = [tuple((unit * c) % order for c in cls) for cls in classes]
        if trial < best:
            best = trial
    return best


def charts(d: MatrixLike | WeightMatrix, omega: Sequence[int]) -> List[Chart]:
    """One chart per maximal cone: stabilizer and residual weights of the free coordinates."""
    wm = _weights(d)
    out: List[Chart] = []
    for pivots in irrelevant_ideal(wm, omega):
        sub = [[wm.rows[i][j] for j in pivots] for i in range(wm.rank)]
        cmap = cokernel_map(sub)
        others = [j for j in range(wm.ncols) if j not in pivots]
        classes = [cmap.image(wm.column(j)) for j in others]
        factors = cmap.group.invariant_factors
        if len(factors) == 1:
            classes = _normalize_cyclic(factors[0], classes)
        out.append(Chart(pivots, cmap.group, tuple(zip(others, classes))))
    return out


def fan_from_chamber(d: MatrixLike | WeightMatrix, omega: Sequence[int]) -> SimplicialFan:
    """Fan whose maximal cones are the complements of the irrelevant index sets.

    Raises:
        NotWellFormed: for a matrix that is not well-formed; call wellform first.
        OnWall: if omega lies on a wall.
    """
    wm = _weights(d)
    if not is_wellformed(wm):
        raise NotWellFormed(f"weight matrix {wm.rows} is not well-formed")
    cones = tuple(
        sorted(tuple(j for j in range(wm.ncols) if j not in I) for I in irrelevant_ideal(wm, omega))
    )
    fan = SimplicialFan(tuple(kernel_rays(wm)), cones)
    if not fan.is_complete():
        raise NotWellFormed(f"fan of {wm.rows} at {tuple(omega)} is not complete")
    return fan
