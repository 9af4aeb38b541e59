from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from math import lcm
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, Rational, diag

from orbifano.errors import DimensionMismatch, InputError, NonConvexCone, NotSurjective
from orbifano.lattice.cones import is_strictly_convex
from orbifano.lattice.normal_forms import (
    IntVector,
    MatrixLike,
    as_int_matrix,
    gcd_of_minors,
    kernel_basis,
    matrix_rank,
    row_echelon,
    row_saturation,
    smith_normal_form,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightMatrix:
    """Integer r x m matrix D presenting a torus action on C^m.

    Columns are the classes of the Cox coordinates x_0, ..., x_{m-1}.
    """

    rows: Tuple[IntVector, ...]
    labels: Tuple[str, ...] = ()

    @classmethod
    def of(
        cls, rows: MatrixLike, labels: Optional[Sequence[str]] = None, check: bool = True
    ) -> "WeightMatrix":
        mat = as_int_matrix(rows)
        wm = cls(
            tuple(tuple(int(x) for x in mat.row(i)) for i in range(mat.rows)),
            tuple(labels) if labels else tuple(f"x{j}" for j in range(mat.cols)),
        )
        if len(wm.labels) != wm.ncols:
            raise InputError(f"{len(wm.labels)} labels for {wm.ncols} columns")
        if check:
            wm.check()
        return wm

    @property
    def matrix(self) -> Matrix:
        return Matrix([list(r) for r in self.rows])

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> IntVector:
        return tuple(row[j] for row in self.rows)

    @property
    def columns(self) -> List[IntVector]:
        return [self.column(j) for j in range(self.ncols)]

    def check(self) -> None:
        """Raises NotSurjective or NonConvexCone unless the columns span a full strictly convex cone."""
        if matrix_rank(self.matrix) != self.rank:
            raise NotSurjective(f"weight matrix rows are not linearly independent: {self.rows}")
        if not is_strictly_convex(self.columns):
            raise NonConvexCone(f"weight columns do not span a strictly convex cone: {self.rows}")

    def anticanonical(self) -> IntVector:
        """Class of -K, the sum of all columns."""
        return tuple(sum(row) for row in self.rows)

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.rows for x in row)
        width = max(width, *(len(lb) for lb in self.labels))
        head = " ".join(lb.rjust(width) for lb in self.labels)
        body = "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)
        return f"{head}\n{body}"


def _as_weights(d: MatrixLike | WeightMatrix) -> Matrix:
    return d.matrix if isinstance(d, WeightMatrix) else as_int_matrix(d)


def is_standard(d: MatrixLike | WeightMatrix) -> bool:
    """The group acts faithfully: the r x r minors of D have gcd 1."""
    mat = _as_weights(d)
    return gcd_of_minors(mat, mat.rows) == 1


def _deleted(mat: Matrix, i: int) -> Matrix:
    sub = mat.copy()
    sub.col_del(i)
    return sub


def is_wellformed(d: MatrixLike | WeightMatrix) -> bool:
    """D is standard and so is every D with one column removed.

    A column whose removal drops the rank marks a divisor that is empty in the
    quotient; such deletions are not tested.
    """
    mat = _as_weights(d)
    if not is_standard(mat):
        return False
    for i in range(mat.cols):
        if gcd_of_minors(_deleted(mat, i), mat.rows) > 1:
            return False
    return True


def _column_lattice_basis(mat: Matrix) -> Matrix:
    """Square matrix whose columns are a basis of the lattice spanned by the columns of mat."""
    s, u, _ = smith_normal_form(mat)
    r = mat.rows
    return u.inv() * diag(*[s[i, i] for i in range(r)])


def wellform_with_map(d: MatrixLike | WeightMatrix) -> Tuple[WeightMatrix, Matrix]:
    """Well-formed presentation of the same coarse quotient, with the rational map on classes.

    Returns (D', T) where T carries a class in the old coordinates to the new
    ones (T D_j = D'_j up to the column rescalings introduced along the way).
    """
    original = _as_weights(d)
    mat = row_saturation(original)
    scale = [1] * mat.cols
    changed = True
    while changed:
        changed = False
        for i in range(mat.cols):
            sub = _deleted(mat, i)
            g = gcd_of_minors(sub, mat.rows)
            if g <= 1:
                continue
            logger.debug("column %d carries a stabilizer of order %d", i, g)
            moved = _column_lattice_basis(sub).inv() * mat
            den = reduce(lcm, (int(Rational(x).q) for x in moved.col(i)), 1)
            moved[:, i] = moved[:, i] * den
            scale[i] *= den
            mat = as_int_matrix(moved)
            changed = True
            break
    mat = row_echelon(mat)
    target = mat * diag(*[Rational(1, c) for c in scale])
    transform = target * original.T * (original * original.T).inv()
    return WeightMatrix.of(mat, labels=getattr(d, "labels", None) or None), transform


def wellform(d: MatrixLike | WeightMatrix) -> WeightMatrix:
    return wellform_with_map(d)[0]


def kernel_rays(d: MatrixLike | WeightMatrix) -> List[IntVector]:
    """Rays of the fan as rows of an integer kernel basis of D."""
    basis = kernel_basis(_as_weights(d))
    return [tuple(int(x) for x in basis.row(i)) for i in range(basis.rows)]


def anticanonical(d: MatrixLike | WeightMatrix) -> IntVector:
    mat = _as_weights(d)
    return tuple(int(sum(mat.row(i))) for i in range(mat.rows))


def weights_from_rays(
    rays: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None
) -> WeightMatrix:
    """Weight matrix of a complete fan from its rays (Gale dual, Hermite form).

    Rows span the integer relations among the rays; the column of ray i is the
    class of the divisor D_i in Cl.
    """
    relations = kernel_basis(Matrix([list(r) for r in rays]).T)
    return WeightMatrix.of(row_echelon(relations.T), labels)


def adjoint_class(
    d: MatrixLike | WeightMatrix, bundles: Sequence[Sequence[int]]
) -> IntVector:
    """-K_F - sum L_i, the default stability condition for a complete intersection."""
    out = list(anticanonical(d))
    for bundle in bundles:
        if len(bundle) != len(out):
            raise DimensionMismatch(
                f"bundle {tuple(bundle)} has length {len(bundle)}, expected {len(out)}"
            )
        out = [a - b for a, b in zip(out, bundle)]
    return tuple(out)
