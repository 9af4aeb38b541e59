from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from sympy import Matrix, Rational

from orbifano.errors import DegenerateCone, DimensionMismatch
from orbifano.lattice.cones import solve
from orbifano.lattice.normal_forms import IntVector


DivisorClass = Tuple[Rational, ...]
Monomial = Tuple[int, ...]


def cone_multiplicity(rays: Sequence[Sequence[int]]) -> int:
    """Index of the sublattice generated by the rays of a full-dimensional simplicial cone.

    Raises:
        DegenerateCone: if the rays do not span.
    """
    if not rays or len(rays) != len(rays[0]):
        raise DegenerateCone("a maximal simplicial cone needs as many rays as the dimension")
    det = int(Matrix([list(r) for r in rays]).det())
    if det == 0:
        raise DegenerateCone(f"rays {list(rays)} do not span")
    return abs(det)


@dataclass
class GradedRingContext:
    """Rational Chow ring of a complete simplicial toric variety.

    Classes are ray-divisor coefficient vectors; `lift` converts classes given in
    weight-matrix coordinates.
    """

    rays: List[IntVector]
    cones: List[FrozenSet[int]]
    weights: Optional[List[IntVector]] = None
    _values: Dict[Monomial, Rational] = field(default_factory=dict, repr=False)
    _duals: Dict[Tuple[FrozenSet[int], int], Tuple[Rational, ...]] = field(
        default_factory=dict, repr=False
    )

    @property
    def dim(self) -> int:
        return len(self.rays[0])

    @classmethod
    def from_fan(cls, rays: Sequence[Sequence[int]], cones: Sequence[Sequence[int]], weights=None):
        ctx = cls([tuple(int(x) for x in r) for r in rays], [frozenset(c) for c in cones])
        if weights is not None:
            ctx.weights = [tuple(int(x) for x in row) for row in weights]
        for cone in ctx.cones:
            if len(cone) != ctx.dim:
                raise DimensionMismatch(f"cone {sorted(cone)} is not maximal in dimension {ctx.dim}")
        return ctx

    @classmethod
    def from_polygon(cls, vertices: Sequence[Sequence[int]]) -> "GradedRingContext":
        n = len(vertices)
        return cls.from_fan(vertices, [(i, (i + 1) % n) for i in range(n)])

    def multiplicity(self, cone: FrozenSet[int]) -> int:
        return cone_multiplicity([self.rays[i] for i in sorted(cone)])

    def anticanonical(self) -> DivisorClass:
        return tuple(Rational(1) for _ in self.rays)

    def ray_divisor(self, i: int) -> DivisorClass:
        return tuple(Rational(1 if j == i else 0) for j in range(len(self.rays)))

    def lift(self, vector: Sequence[int]) -> DivisorClass:
        """Ray coefficients c with D c = vector, supported on independent columns."""
        if self.weights is None:
            raise ValueError("context has no weight matrix")
        columns = [tuple(row[j] for row in self.weights) for j in range(len(self.rays))]
        basis: List[int] = []
        for j, col in enumerate(columns):
            trial = basis + [j]
            if Matrix([list(columns[i]) for i in trial]).rank() == len(trial):
                basis = trial
        coeffs = solve([columns[i] for i in basis], list(vector))
        if coeffs is None:
            raise DimensionMismatch(f"class {tuple(vector)} is not in the span of the weights")
        out = [Rational(0)] * len(self.rays)
        for i, c in zip(basis, coeffs):
            out[i] = c
        return tuple(out)

    def _cone_containing(self, support: FrozenSet[int]) -> Optional[FrozenSet[int]]:
        for cone in self.cones:
            if support <= cone:
                return cone
        return None

    def _dual(self, cone: FrozenSet[int], j: int) -> Tuple[Rational, ...]:
        key = (cone, j)
        if key not in self._duals:
            order = sorted(cone)
            cols = [[self.rays[i][k] for i in order] for k in range(self.dim)]
            target = [1 if i == j else 0 for i in order]
            m = solve(cols, target)
            if m is None:
                raise DegenerateCone(f"cone {order} is degenerate")
            self._duals[key] = m
        return self._duals[key]

    def monomial_value(self, mono: Monomial) -> Rational:
        """Degree of a product of ray divisors given as a sorted index tuple."""
        if mono in self._values:
            return self._values[mono]
        support = frozenset(mono)
        cone = self._cone_containing(support)
        if cone is None:
            value = Rational(0)
        elif len(support) == len(mono):
            value = Rational(1, self.multiplicity(cone))
        else:
            j = next(i for i in sorted(support) if mono.count(i) > 1)
            m = self._dual(cone, j)
            rest = list(mono)
            rest.remove(j)
            value = Rational(0)
            for l, ray in enumerate(self.rays):
                if l in cone:
                    continue
                pairing = sum(a * b for a, b in zip(m, ray))
                if pairing != 0:
                    value -= pairing * self.monomial_value(tuple(sorted(rest + [l])))
        self._values[mono] = value
        return value


def top_intersection(ctx: GradedRingContext, classes: Sequence[DivisorClass]) -> Rational:
    """Intersection number of dim-many divisor classes.

    Raises:
        DimensionMismatch: if the number of factors differs from the dimension.
    """
    if len(classes) != ctx.dim:
        raise DimensionMismatch(f"expected {ctx.dim} classes, got {len(classes)}")
    supports = [[(i, c) for i, c in enumerate(cls) if c != 0] for cls in classes]
    total = Rational(0)
    for terms in product(*supports):
        coeff = Rational(1)
        for _, c in terms:
            coeff *= c
        total += coeff * ctx.monomial_value(tuple(sorted(i for i, _ in terms)))
    return total
