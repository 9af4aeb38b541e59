from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Tuple, Union

from sympy import Rational, ceiling, floor, series, symbols

from orbifano.errors import BadCongruence

logger = logging.getLogger(__name__)

Degree = Union[int, str, Rational]

_t = symbols("t")


@dataclass(frozen=True)
class FamilyInvariants:
    """Numerical data of a del Pezzo surface with k points 1/3(1,1) and K^2 = d."""

    k: int
    d: Rational
    h0: int
    r: int
    n: int
    c2hat: Rational
    moduli: int

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "h0": self.h0,
            "r": self.r,
            "n": self.n,
            "c2hat": self.c2hat,
            "moduli": self.moduli,
        }


def _degree(k: int, d: Degree) -> Rational:
    value = Rational(d)
    if value <= 0:
        raise BadCongruence(f"K^2 = {value} must be positive")
    if not (value - Rational(k, 3)).is_integer:
        raise BadCongruence(f"K^2 = {value} is not congruent to {k}/3 mod 1")
    return value


def invariants_of(k: int, d: Degree) -> FamilyInvariants:
    """Riemann-Roch and Noether for (k, d).

    h0 = 1 + d - k/3, r = 10 - d + k/3, n = 12 - d - 5k/3, and the number of
    moduli 10 - 2d - 4k/3.

    Raises:
        BadCongruence: if d <= 0 or d is not k/3 mod 1.
    """
    d = _degree(k, d)
    third = Rational(k, 3)
    n = 12 - d - 5 * third
    return FamilyInvariants(
        k=k,
        d=d,
        h0=int(1 + d - third),
        r=int(10 - d + third),
        n=int(n),
        c2hat=n + third,
        moduli=int(10 - 2 * d - 4 * third),
    )


def poincare_numerator(k: int, d: Degree) -> Tuple[Rational, ...]:
    d = _degree(k, d)
    a = d - 1 - Rational(k, 3)
    b = d + Rational(2 * k, 3)
    return (Rational(1), a, b, a, Rational(1))


def poincare_series(k: int, d: Degree, terms: int = 12) -> List[int]:
    """First `terms` values h0(-nK), n = 0, 1, ..., from the closed-form Poincare series."""
    if terms < 1:
        return []
    num = sum(c * _t**i for i, c in enumerate(poincare_numerator(k, d)))
    expansion = series(num / ((1 - _t) ** 2 * (1 - _t**3)), _t, 0, terms).removeO()
    coeffs = [expansion.coeff(_t, i) for i in range(terms)]
    out: List[int] = []
    for i, c in enumerate(coeffs):
        if not c.is_integer:
            raise BadCongruence(f"coefficient of t^{i} is {c} for (k, d) = ({k}, {d})")
        out.append(int(c))
    return out


def hilbert_function(k: int, d: Degree, n: int) -> int:
    """h0(X, -nK_X)."""
    return poincare_series(k, d, n + 1)[n]


def defect_bounds(k: int, d: Degree) -> Tuple[int, int]:
    """Range of the defect sigma allowed by k - r/2 <= sigma <= k/2."""
    r = invariants_of(k, d).r
    return max(0, int(ceiling(k - Rational(r, 2)))), int(floor(Rational(k, 2)))


def defect_from_pi1(pi1: str) -> int:
    """Defect of a surface whose smooth locus has the given fundamental group tag.

    H_1 of the smooth locus is (Z/3)^sigma, so "0" gives 0, "Z/3" gives 1 and
    "(Z/3)^s" gives s.
    """
    tag = pi1.replace(" ", "")
    if tag in ("0", "1", "trivial"):
        return 0
    if tag == "Z/3":
        return 1
    if tag.startswith("(Z/3)^"):
        return int(tag.split("^", 1)[1])
    raise ValueError(f"unknown fundamental group tag {pi1!r}")
