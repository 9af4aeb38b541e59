from __future__ import annotations

from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import Matrix, QQ, Rational
from sympy.polys.matrices import DomainMatrix

from orbifano.lattice.normal_forms import IntVector, kernel_basis

RationalVector = Tuple[Rational, ...]


def _domain(rows: Sequence[Sequence[object]]) -> DomainMatrix:
    return DomainMatrix.from_Matrix(Matrix([list(r) for r in rows])).convert_to(QQ)


def dot(u: Sequence[object], v: Sequence[object]) -> object:
    return sum((a * b for a, b in zip(u, v)), 0)


def rank(vectors: Sequence[Sequence[object]]) -> int:
    if not vectors:
        return 0
    return _domain(vectors).rank()


def primitive(v: Sequence[object]) -> IntVector:
    """Primitive integer vector on the ray through a nonzero rational vector."""
    vals = [Rational(x) for x in v]
    den = reduce(lcm, (int(x.q) for x in vals), 1)
    ints = [int(x * den) for x in vals]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def solve(cols: Sequence[Sequence[object]], target: Sequence[object]) -> Optional[RationalVector]:
    """Coefficients c with sum c_i cols_i == target for linearly independent cols, else None."""
    if not cols:
        return () if all(t == 0 for t in target) else None
    n = len(target)
    k = len(cols)
    aug = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    reduced, pivots = _domain(aug).rref()
    if k in pivots:
        return None
    if len(pivots) < k:
        raise ValueError("columns are linearly dependent")
    mat = reduced.to_Matrix()
    return tuple(Rational(mat[i, k]) for i in range(k))


def hyperplane_normal(vectors: Sequence[Sequence[int]], dim: int) -> IntVector:
    """Primitive integer normal of the hyperplane spanned by dim - 1 independent vectors."""
    if dim == 1:
        return (1,)
    null = Matrix([list(v) for v in vectors]).nullspace()
    if len(null) != 1:
        raise ValueError("vectors do not span a hyperplane")
    return primitive(list(null[0]))


def facet_normals(cols: Sequence[Sequence[int]]) -> List[IntVector]:
    """Inward primitive facet normals of a full-dimensional cone given by generators."""
    dim = len(cols[0])
    normals: List[IntVector] = []
    for subset in combinations(range(len(cols)), dim - 1):
        vecs = [cols[i] for i in subset]
        if dim > 1 and rank(vecs) != dim - 1:
            continue
        n = hyperplane_normal(vecs, dim)
        values = [dot(n, c) for c in cols]
        if all(v >= 0 for v in values):
            oriented = n
        elif all(v <= 0 for v in values):
            oriented = tuple(-x for x in n)
        else:
            continue
        if oriented not in normals:
            normals.append(oriented)
    return sorted(normals)


def in_simplicial_cone(cols: Sequence[Sequence[int]], v: Sequence[object], strict: bool = False) -> bool:
    coeffs = solve(cols, v)
    if coeffs is None:
        return False
    if strict:
        return all(c > 0 for c in coeffs)
    return all(c >= 0 for c in coeffs)


def in_cone(cols: Sequence[Sequence[int]], v: Sequence[object]) -> bool:
    """Exact membership by Carathéodory: v is a nonnegative combination of an independent subset."""
    if all(x == 0 for x in v):
        return True
    dim = len(v)
    for size in range(1, min(dim, len(cols)) + 1):
        for subset in combinations(range(len(cols)), size):
            vecs = [cols[i] for i in subset]
            if rank(vecs) != size:
                continue
            if in_simplicial_cone(vecs, v):
                return True
    return False


def circuits(cols: Sequence[Sequence[int]]) -> Iterable[Tuple[Tuple[int, ...], IntVector]]:
    """Minimal dependent subsets with their primitive kernel vector."""
    r = rank(cols)
    for size in range(1, r + 2):
        for subset in combinations(range(len(cols)), size):
            vecs = [cols[i] for i in subset]
            if rank(vecs) != size - 1:
                continue
            if any(rank([vecs[j] for j in range(size) if j != i]) != size - 1 for i in range(size)):
                continue
            ker = kernel_basis(Matrix([list(c) for c in vecs]).T)
            yield subset, primitive([ker[i, 0] for i in range(size)])


def is_strictly_convex(cols: Sequence[Sequence[int]]) -> bool:
    """True iff no nonzero nonnegative combination of the columns vanishes."""
    for _, vec in circuits(cols):
        if all(x > 0 for x in vec) or all(x < 0 for x in vec):
            return False
    return True


def positive_grading(cols: Sequence[Sequence[int]]) -> IntVector:
    """Integer functional positive on every column of a strictly convex full-dimensional cone."""
    normals = facet_normals(cols)
    grading = tuple(sum(n[i] for n in normals) for i in range(len(cols[0])))
    if any(dot(grading, c) <= 0 for c in cols):
        raise ValueError("cone is not strictly convex")
    return grading


def extreme_rays(normals: Sequence[Sequence[int]], interior: Sequence[object]) -> List[IntVector]:
    """Extreme rays of the full-dimensional cone {x : n.x >= 0 for all normals}.

    `interior` is a point with n.interior > 0 for every normal; it fixes the sign
    of each candidate ray.
    """
    dim = len(interior)
    rays: List[IntVector] = []
    if dim == 1:
        return [(1,)] if interior[0] > 0 else [(-1,)]
    for subset in combinations(range(len(normals)), dim - 1):
        vecs = [normals[i] for i in subset]
        if rank(vecs) != dim - 1:
            continue
        ray = hyperplane_normal(vecs, dim)
        for candidate in (ray, tuple(-x for x in ray)):
            if all(dot(n, candidate) >= 0 for n in normals) and candidate not in rays:
                rays.append(candidate)
    return sorted(rays)


def same_cone(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """Cone equality by mutual containment of generators."""
    return all(in_cone(list(b), v) for v in a) and all(in_cone(list(a), v) for v in b)
