from __future__ import annotations

from typing import List, Sequence

from orbifano.errors import NonConvexCone
from orbifano.lattice.cones import dot, is_strictly_convex, positive_grading, rank, solve
from orbifano.lattice.normal_forms import IntVector, MatrixLike, as_int_matrix, row_echelon


def enumerate_nonneg_solutions(d: MatrixLike, target: Sequence[int]) -> List[IntVector]:
    """All v >= 0 with D v = target, in descending lexicographic order.

    Raises:
        NonConvexCone: if a nonzero nonnegative kernel vector makes the set infinite.
    """
    mat = as_int_matrix(d)
    rows, ncols = mat.shape
    if len(target) != rows:
        raise ValueError(f"target has length {len(target)}, expected {rows}")
    columns = [tuple(int(mat[i, j]) for i in range(rows)) for j in range(ncols)]
    if not is_strictly_convex(columns):
        raise NonConvexCone("weight columns admit a nonnegative relation")

    echelon = row_echelon(mat)
    if echelon.shape[0] == 0:
        return [tuple([0] * ncols)] if all(t == 0 for t in target) else []
    reduced = [tuple(int(echelon[i, j]) for i in range(echelon.shape[0])) for j in range(ncols)]
    grading = positive_grading(reduced)
    weights = [dot(grading, c) for c in reduced]
    # every solution of D v = t has the same degree under the pulled-back grading
    degree = _solution_degree(columns, weights, target)
    if degree is None:
        return []

    found: List[IntVector] = []
    current = [0] * ncols

    def search(idx: int, remaining_degree: int, remaining: List[int]) -> None:
        if idx == ncols:
            if remaining_degree == 0 and all(r == 0 for r in remaining):
                found.append(tuple(current))
            return
        w = weights[idx]
        col = columns[idx]
        for e in range(remaining_degree // w, -1, -1):
            current[idx] = e
            search(
                idx + 1,
                remaining_degree - e * w,
                [r - e * c for r, c in zip(remaining, col)],
            )
        current[idx] = 0

    search(0, degree, [int(t) for t in target])
    return sorted(found, reverse=True)


def _solution_degree(columns: List[IntVector], weights: List[int], target: Sequence[int]):
    """Degree sum(weights_j v_j) shared by all solutions, or None when no rational solution exists."""
    basis: List[int] = []
    for j, col in enumerate(columns):
        if rank([columns[i] for i in basis] + [col]) > len(basis):
            basis.append(j)
    coeffs = solve([columns[i] for i in basis], list(target))
    if coeffs is None:
        return None
    degree = sum(c * weights[j] for c, j in zip(coeffs, basis))
    if degree.q != 1 or degree < 0:
        return None
    return int(degree)
