from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Expr, Integer, Mul, Poly, Symbol, expand
from sympy.parsing.sympy_parser import parse_expr

from orbifano.errors import InputError
from orbifano.lattice.enumerate import enumerate_nonneg_solutions
from orbifano.lattice.normal_forms import IntVector
from orbifano.toric.weights import WeightMatrix

# Polynomials are kept as expanded sympy expressions in named Cox coordinates.
MonomialPoly = Expr

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


@dataclass(frozen=True, order=True)
class Monomial:
    """Exponent vector over the columns of a weight matrix."""

    exponents: Tuple[int, ...]

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(j for j, e in enumerate(self.exponents) if e)

    def involves(self, coordinates: Iterable[int]) -> bool:
        return any(self.exponents[j] for j in coordinates)

    def degree(self, wm: WeightMatrix) -> IntVector:
        return tuple(
            sum(w * e for w, e in zip(row, self.exponents)) for row in wm.rows
        )

    def as_expr(self, labels: Sequence[str]) -> Expr:
        return Mul(*[Symbol(lb) ** e for lb, e in zip(labels, self.exponents)])

    def render(self, labels: Sequence[str]) -> str:
        parts = []
        for lb, e in zip(labels, self.exponents):
            if e == 1:
                parts.append(lb)
            elif e > 1:
                parts.append(f"{lb}^{e}")
        return "*".join(parts) or "1"


def parse_poly(text: str) -> MonomialPoly:
    """Expanded polynomial from text such as "-x3*x5 + x4*y1**2"; every name is a plain symbol."""
    names = {name: Symbol(name) for name in _IDENT.findall(text)}
    try:
        return expand(parse_expr(text, local_dict=names))
    except (SyntaxError, TypeError) as exc:
        raise InputError(f"cannot parse polynomial {text!r}: {exc}") from exc


def monomial_basis(wm: WeightMatrix, bundle: Sequence[int]) -> List[Monomial]:
    """All monomials of class `bundle`, in descending lexicographic order of exponents.

    Raises:
        NonConvexCone: if the weights admit a nonnegative relation.
    """
    return [Monomial(v) for v in enumerate_nonneg_solutions(wm.rows, list(bundle))]


def restricted_basis(basis: Sequence[Monomial], killed: Iterable[int]) -> List[Monomial]:
    """Monomials not involving any of the killed coordinates."""
    killed = tuple(killed)
    return [mono for mono in basis if not mono.involves(killed)]


def terms(p: MonomialPoly, labels: Sequence[str]) -> Dict[Monomial, object]:
    """Coefficient of every monomial of p, exponents over `labels`."""
    if p == 0:
        return {}
    unknown = {str(s) for s in p.free_symbols} - set(labels)
    if unknown:
        raise InputError(f"polynomial uses coordinates {sorted(unknown)} outside {list(labels)}")
    poly = Poly(p, *[Symbol(lb) for lb in labels])
    return {Monomial(tuple(int(e) for e in monom)): coeff for monom, coeff in poly.terms()}


def check_homogeneity(p: MonomialPoly, wm: WeightMatrix) -> Optional[IntVector]:
    """Common class of all monomials of p under wm, or None when mixed or zero."""
    classes = {mono.degree(wm) for mono in terms(p, wm.labels)}
    if len(classes) != 1:
        return None
    return next(iter(classes))


def check_substitution_identity(
    subst: Mapping[str, Union[str, Expr]], relation: Union[str, MonomialPoly]
) -> bool:
    """True iff the relation becomes the zero polynomial after substituting monomials."""
    rel = parse_poly(relation) if isinstance(relation, str) else relation
    mapping = {
        Symbol(name): parse_poly(value) if isinstance(value, str) else value
        for name, value in subst.items()
    }
    return expand(rel.xreplace(mapping)) == Integer(0)
