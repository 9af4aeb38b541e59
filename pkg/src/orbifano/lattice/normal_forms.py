from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Sequence, Tuple, Union

from sympy import Matrix, ZZ, eye
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_decomp

IntVector = Tuple[int, ...]
MatrixLike = Union[Matrix, Sequence[Sequence[int]]]


def as_int_matrix(m: MatrixLike) -> Matrix:
    if isinstance(m, Matrix):
        return m
    rows = [list(r) for r in m]
    if not rows:
        return Matrix(0, 0, [])
    return Matrix(rows)


def vec_gcd(values: Sequence[int]) -> int:
    """gcd of a sequence; gcd of the empty sequence is 0."""
    return reduce(gcd, (abs(int(v)) for v in values), 0)


@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int
    invariant_factors: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def order(self) -> int:
        """Order of the torsion part (1 when trivial)."""
        return reduce(lambda a, b: a * b, self.invariant_factors, 1)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def __str__(self) -> str:
        parts = [f"Z/{f}" for f in self.invariant_factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def smith_normal_form(m: MatrixLike) -> Tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with transforms.

    Returns:
        (S, U, V) with U*m*V == S, U and V unimodular and the diagonal of S
        nonnegative in divisibility order.
    """
    mat = as_int_matrix(m)
    rows, cols = mat.shape
    if rows == 0 or cols == 0:
        return Matrix.zeros(rows, cols), eye(rows), eye(cols)
    s, u, v = smith_normal_decomp(mat, domain=ZZ)
    s, u, v = Matrix(s), Matrix(u), Matrix(v)
    for i in range(min(rows, cols)):
        if s[i, i] < 0:
            s[i, :] = -s[i, :]
            u[i, :] = -u[i, :]
    return s, u, v


def diagonal(s: Matrix) -> Tuple[int, ...]:
    return tuple(int(s[i, i]) for i in range(min(s.shape)))


def matrix_rank(m: MatrixLike) -> int:
    return sum(1 for d in diagonal(smith_normal_form(m)[0]) if d != 0)


@dataclass(frozen=True)
class CokernelMap:
    """Coordinates on Z^n / image(m) read off from the Smith form."""

    group: AbelianGroup
    u: Matrix
    diag: Tuple[int, ...]

    def image(self, vec: Sequence[int]) -> IntVector:
        """Class of `vec` as (torsion coordinates reduced mod each factor, free coordinates)."""
        y = self.u * Matrix(list(vec))
        torsion: list[int] = []
        free: list[int] = []
        for i in range(len(y)):
            d = self.diag[i] if i < len(self.diag) else 0
            if d == 0:
                free.append(int(y[i]))
            elif d > 1:
                torsion.append(int(y[i]) % d)
        return tuple(torsion + free)

    def is_zero(self, vec: Sequence[int]) -> bool:
        return all(c == 0 for c in self.image(vec))


def cokernel_map(m: MatrixLike, rows: int | None = None) -> CokernelMap:
    mat = as_int_matrix(m)
    n = mat.shape[0] if rows is None else rows
    if mat.shape[1] == 0:
        return CokernelMap(AbelianGroup(n, ()), eye(n), ())
    s, u, _ = smith_normal_form(mat)
    diag = diagonal(s)
    factors = tuple(d for d in diag if d > 1)
    rank = sum(1 for d in diag if d != 0)
    return CokernelMap(AbelianGroup(n - rank, factors), u, diag)


def cokernel(m: MatrixLike) -> AbelianGroup:
    """Z^rows / image(m) in canonical form."""
    return cokernel_map(m).group


def gcd_of_minors(m: MatrixLike, size: int) -> int:
    """gcd of all size x size minors (0 if all vanish)."""
    mat = as_int_matrix(m)
    rows, cols = mat.shape
    if size <= 0 or size > min(rows, cols):
        return 0
    g = 0
    for ri in combinations(range(rows), size):
        for ci in combinations(range(cols), size):
            g = gcd(g, abs(int(mat.extract(list(ri), list(ci)).det())))
            if g == 1:
                return 1
    return g


def kernel_basis(m: MatrixLike) -> Matrix:
    """Columns form a Z-basis of the integer kernel {x : m x = 0}."""
    mat = as_int_matrix(m)
    s, _, v = smith_normal_form(mat)
    rank = sum(1 for d in diagonal(s) if d != 0)
    return v[:, rank:]


def row_saturation(m: MatrixLike) -> Matrix:
    """Rows form a basis of (row space over Q) ∩ Z^cols."""
    mat = as_int_matrix(m)
    s, _, v = smith_normal_form(mat)
    rank = sum(1 for d in diagonal(s) if d != 0)
    return v.inv()[:rank, :]


def row_echelon(m: MatrixLike) -> Matrix:
    """Integer row echelon form of the row lattice (Hermite form, zero rows dropped).

    Pivots are positive and entries above a pivot are reduced into [0, pivot).
    sympy's column-style form has its pivots at the bottom right and only visits
    min(rows, cols) rows, so coordinates are reversed and the transpose is padded
    with zero columns until it is square.
    """
    mat = as_int_matrix(m)
    if mat.rows == 0:
        return Matrix(0, 0, [])
    ncols = mat.cols
    nonzero = [i for i in range(mat.rows) if any(mat.row(i))]
    if not nonzero:
        return Matrix(0, ncols, [])
    flipped = mat.extract(nonzero, list(reversed(range(ncols)))).T
    if flipped.cols < ncols:
        flipped = Matrix.hstack(Matrix.zeros(ncols, ncols - flipped.cols), flipped)
    # rebuild from entries so sympy re-infers ZZ (integer-valued results of
    # rational arithmetic otherwise keep a QQ domain, which HNF rejects)
    h = hermite_normal_form(Matrix(flipped.tolist()))
    return h.extract(list(reversed(range(h.rows))), list(reversed(range(h.cols)))).T
