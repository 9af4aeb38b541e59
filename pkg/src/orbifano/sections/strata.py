from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from math import gcd
from typing import List, Literal, Optional, Sequence, Tuple

from sympy import Matrix, Rational

from orbifano.errors import CannotReduce
from orbifano.lattice.cones import solve
from orbifano.lattice.normal_forms import AbelianGroup, IntVector, MatrixLike, cokernel_map, kernel_basis
from orbifano.polygon.fano import convex_hull
from orbifano.sections.monomials import Monomial, monomial_basis, restricted_basis
from orbifano.singularity.cyclic import Basket, CyclicQuotient
from orbifano.toric.chambers import irrelevant_ideal
from orbifano.toric.weights import WeightMatrix

logger = logging.getLogger(__name__)

IndexSet = Tuple[int, ...]
StratumStatus = Literal["disjoint", "points", "non-isolated", "cannot-reduce"]


@dataclass(frozen=True)
class StratumReport:
    """How a complete intersection X meets one torus-orbit stratum of F.

    `stratum` lists the coordinates that are nonzero on the orbit; the orbit
    has dimension `dim` and generic stabilizer `stabilizer`.
    """

    stratum: IndexSet
    dim: int
    stabilizer: AbelianGroup
    status: StratumStatus
    count: int = 0
    residual: Tuple[Tuple[int, IntVector], ...] = ()
    eliminated: IndexSet = ()
    singularity: Optional[CyclicQuotient] = None
    reason: str = ""

    def describe(self, labels: Sequence[str]) -> str:
        where = ",".join(labels[j] for j in self.stratum)
        head = f"{{{where}}} dim {self.dim}, stabilizer {self.stabilizer}"
        if self.status == "points":
            return f"{head}: {self.count} × {self.singularity}"
        return f"{head}: {self.status}" + (f" ({self.reason})" if self.reason else "")


def quotient_type(order: int, a: int, b: int) -> CyclicQuotient:
    """Normal form of C^2 / Z/order acting with weights (a, b), quasi-reflections divided out."""
    g = gcd(order, gcd(a, b))
    n, a, b = order // g, a // g, b // g
    for _ in range(2):
        h = gcd(n, b)
        n, b = n // h, b // h
        a, b = b, a
    if n == 1:
        return CyclicQuotient.of(1, 0)
    return CyclicQuotient.of(n, b * pow(a, -1, n))


def _area(points: List[Tuple[Rational, ...]]) -> Rational:
    hull = convex_hull(points)
    if len(hull) < 3:
        return Rational(0)
    twice = sum(
        hull[i][0] * hull[(i + 1) % len(hull)][1] - hull[(i + 1) % len(hull)][0] * hull[i][1]
        for i in range(len(hull))
    )
    return Rational(abs(twice), 2)


def _orbit_coordinates(kernel: Matrix, monomials: List[Monomial], stratum: IndexSet):
    """Exponents of the monomials relative to the first, in a basis of the orbit's characters."""
    cols = [tuple(kernel[i, j] for i in range(kernel.rows)) for j in range(kernel.cols)]
    base = [monomials[0].exponents[j] for j in stratum]
    out = []
    for mono in monomials:
        diff = [mono.exponents[j] - b for j, b in zip(stratum, base)]
        coeffs = solve(cols, diff)
        if coeffs is None:
            raise ValueError("monomials of one class differ by a non-character")
        out.append(tuple(coeffs))
    return out


def _point_count(kernel: Matrix, newton: List[List[Monomial]], stratum: IndexSet) -> int:
    """Isolated solutions of general sections with the given supports on the orbit torus."""
    dim = kernel.cols
    if dim == 0:
        return 1
    coords = [_orbit_coordinates(kernel, monos, stratum) for monos in newton]
    if dim == 1:
        pts = [c[0] for c in coords[0]]
        return int(max(pts) - min(pts))
    if dim == 2:
        p, q = coords
        total = _area([(a[0] + b[0], a[1] + b[1]) for a in p for b in q])
        return int(total - _area(p) - _area(q))
    raise CannotReduce(f"orbit of dimension {dim} needs mixed volumes in dimension {dim}")


def _linear_candidates(basis: List[Monomial], stratum: IndexSet, killed: IndexSet) -> List[int]:
    """Killed coordinates x_j with x_j * (monomial on the stratum) in the basis."""
    found = []
    for mono in basis:
        hit = [j for j in killed if mono.exponents[j]]
        if len(hit) == 1 and mono.exponents[hit[0]] == 1 and hit[0] not in found:
            found.append(hit[0])
    return sorted(found)


def stratum_report(
    wm: WeightMatrix,
    bases: Sequence[List[Monomial]],
    stratum: IndexSet,
) -> StratumReport:
    """Analyse the orbit where exactly the coordinates in `stratum` are nonzero.

    Each bundle is either a unit on the orbit (one surviving monomial), cuts
    the orbit (two or more), or vanishes on it (none). A general member of the
    last kind is solved for a normal coordinate through a linear term.
    """
    sub = [[wm.rows[i][j] for j in stratum] for i in range(wm.rank)]
    cmap = cokernel_map(sub)
    group = cmap.group
    dim = len(stratum) - wm.rank
    killed = tuple(j for j in range(wm.ncols) if j not in stratum)
    vanishing: List[int] = []
    cutting: List[List[Monomial]] = []
    for i, basis in enumerate(bases):
        surviving = restricted_basis(basis, killed)
        if len(surviving) == 1:
            return StratumReport(stratum, dim, group, "disjoint", reason=f"bundle {i} is a unit")
        if surviving:
            cutting.append(surviving)
        else:
            vanishing.append(i)
    if len(cutting) > dim:
        return StratumReport(stratum, dim, group, "disjoint", reason="overdetermined")
    if len(cutting) < dim:
        return StratumReport(
            stratum, dim, group, "non-isolated", reason=f"meets X in dimension {dim - len(cutting)}"
        )
    try:
        count = _point_count(kernel_basis(Matrix(sub)), cutting, stratum)
    except CannotReduce as exc:
        logger.debug("stratum %s: %s", stratum, exc)
        return StratumReport(stratum, dim, group, "cannot-reduce", reason=str(exc))
    if count == 0:
        return StratumReport(stratum, dim, group, "disjoint", reason="no common zero")

    choices = [_linear_candidates(bases[i], stratum, killed) for i in vanishing]
    eliminated: Optional[IndexSet] = None
    for pick in product(*choices):
        if len(set(pick)) == len(pick):
            eliminated = tuple(pick)
            break
    if eliminated is None:
        logger.debug("stratum %s: no linear terms for bundles %s", stratum, vanishing)
        return StratumReport(
            stratum, dim, group, "cannot-reduce", count=count, reason="no linear term"
        )
    residual = tuple(
        (j, cmap.image([wm.rows[i][j] for i in range(wm.rank)]))
        for j in killed
        if j not in eliminated
    )
    if len(group.invariant_factors) != 1 or len(residual) != 2:
        return StratumReport(
            stratum, dim, group, "cannot-reduce", count=count, residual=residual,
            eliminated=eliminated, reason="stabilizer is not cyclic on a surface slice",
        )
    (_, wa), (_, wb) = residual
    point = quotient_type(group.order, wa[0], wb[0])
    return StratumReport(
        stratum, dim, group, "points", count=count, residual=residual,
        eliminated=eliminated, singularity=point,
    )


def ci_singularity_report(
    d: MatrixLike | WeightMatrix, omega: Sequence[int], bundles: Sequence[Sequence[int]]
) -> List[StratumReport]:
    """Every stratum of F with nontrivial stabilizer and how X meets it.

    Raises:
        OnWall: if omega lies on a wall.
    """
    wm = d if isinstance(d, WeightMatrix) else WeightMatrix.of(d)
    irrelevant = [frozenset(I) for I in irrelevant_ideal(wm, omega)]
    bases = [monomial_basis(wm, b) for b in bundles]
    out: List[StratumReport] = []
    for size in range(wm.rank, wm.ncols + 1):
        for stratum in combinations(range(wm.ncols), size):
            if not any(I <= set(stratum) for I in irrelevant):
                continue
            sub = [[wm.rows[i][j] for j in stratum] for i in range(wm.rank)]
            if cokernel_map(sub).group.is_trivial:
                continue
            out.append(stratum_report(wm, bases, stratum))
    return out


def basket_of_report(reports: Sequence[StratumReport]) -> Basket:
    """Singular points of X collected from a report.

    Raises:
        CannotReduce: if some stratum could not be decided or meets X in a curve.
    """
    points: List[CyclicQuotient] = []
    for rep in reports:
        if rep.status in ("cannot-reduce", "non-isolated"):
            raise CannotReduce(f"stratum {rep.stratum}: {rep.status} ({rep.reason})")
        if rep.status == "points" and rep.singularity is not None:
            points.extend([rep.singularity] * rep.count)
    return Basket.of(points)
