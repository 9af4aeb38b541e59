from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable, List, Sequence, Tuple

from sympy import Matrix, Rational
from sympy.core.intfunc import igcdex

from orbifano.errors import DegenerateCone, SmoothPoint
from orbifano.lattice.cones import primitive


@dataclass(frozen=True, order=True)
class CyclicQuotient:
    """Surface cyclic quotient singularity 1/r(1,a) in normal form.

    r = 1 (with a = 0) encodes a smooth point.
    """

    r: int
    a: int

    @classmethod
    def of(cls, r: int, a: int) -> "CyclicQuotient":
        if r < 1:
            raise ValueError(f"order must be positive, got {r}")
        if r == 1:
            return cls(1, 0)
        a %= r
        if gcd(a, r) != 1:
            raise ValueError(f"1/{r}(1,{a}) is not an isolated cyclic quotient")
        return cls(r, min(a, pow(a, -1, r)))

    @property
    def is_smooth(self) -> bool:
        return self.r == 1

    def __str__(self) -> str:
        return "smooth" if self.is_smooth else f"1/{self.r}(1,{self.a})"


ONE_THIRD = CyclicQuotient.of(3, 1)
A1 = CyclicQuotient.of(2, 1)
A2 = CyclicQuotient.of(3, 2)


@dataclass(frozen=True)
class Basket:
    points: Tuple[CyclicQuotient, ...] = ()

    @classmethod
    def of(cls, points: Iterable[CyclicQuotient]) -> "Basket":
        return cls(tuple(sorted(p for p in points if not p.is_smooth)))

    def __len__(self) -> int:
        return len(self.points)

    def count(self, point: CyclicQuotient) -> int:
        return sum(1 for p in self.points if p == point)

    @property
    def is_pure_one_third(self) -> bool:
        return all(p == ONE_THIRD for p in self.points)

    def __str__(self) -> str:
        if not self.points:
            return "∅"
        counts = Counter(self.points)
        return ", ".join(f"{n} × {p}" for p, n in sorted(counts.items()))


def det2(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def cone_singularity(u: Sequence[int], v: Sequence[int]) -> CyclicQuotient:
    """Quotient type of the affine toric surface of the cone spanned by u and v.

    Raises:
        DegenerateCone: if u and v are parallel.
    """
    u, v = primitive(u), primitive(v)
    det = det2(u, v)
    if det == 0:
        raise DegenerateCone(f"rays {u} and {v} are parallel")
    if det > 0:
        u, v = v, u
    r = abs(det)
    if r == 1:
        return CyclicQuotient.of(1, 0)
    x, y, g = igcdex(u[0], u[1])
    if g < 0:
        x, y = -x, -y
    # A = [[u1, -u0], [x, y]] sends u to (0, 1) and v to (r, b)
    b = int(x) * v[0] + int(y) * v[1]
    return CyclicQuotient.of(r, -b)


def hj_expansion(s: CyclicQuotient) -> List[int]:
    """Hirzebruch-Jung continued fraction of r/a (negated self-intersections).

    Raises:
        SmoothPoint: for r = 1.
    """
    if s.is_smooth:
        raise SmoothPoint("a smooth point has no resolution graph")
    out: List[int] = []
    n, d = s.r, s.a
    while d:
        c = -(-n // d)
        out.append(c)
        n, d = d, c * d - n
    return out


def discrepancies(s: CyclicQuotient) -> List[Rational]:
    """Discrepancies of the exceptional curves of the minimal resolution, in chain order."""
    chain = hj_expansion(s)
    size = len(chain)
    form = Matrix.zeros(size, size)
    for i, b in enumerate(chain):
        form[i, i] = -b
        if i + 1 < size:
            form[i, i + 1] = form[i + 1, i] = 1
    rhs = Matrix([b - 2 for b in chain])
    return [Rational(x) for x in form.LUsolve(rhs)]


def canonical_index(s: CyclicQuotient) -> int:
    """Smallest positive multiple of K that is Cartier at the point."""
    if s.is_smooth:
        return 1
    return s.r // gcd(s.r, s.a + 1)


def is_du_val(s: CyclicQuotient) -> bool:
    return s.is_smooth or (s.a + 1) % s.r == 0


def is_class_T(s: CyclicQuotient) -> bool:
    """True iff 1/r(1,a) admits a qG-smoothing: r divides (a+1)^2."""
    if s.is_smooth:
        return True
    return (s.a + 1) ** 2 % s.r == 0


def basket_of(points: Iterable[CyclicQuotient]) -> Basket:
    return Basket.of(points)
